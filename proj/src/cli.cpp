#include "derlie/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "derlie/errors.hpp"
#include "derlie/modrank.hpp"
#include "derlie/serialize.hpp"
#include "derlie/subalgebra.hpp"
#include "derlie/text.hpp"
#include "derlie/witness.hpp"

namespace derlie {

using nlohmann::json;

namespace {

// Every flag any subcommand may bind; each subcommand registers the subset it uses.
struct Options {
    std::size_t n = 0;
    std::size_t s = 0;
    std::string spec;
    std::string inner;
    std::string outer;
    std::optional<std::uint64_t> seed;
    unsigned trials = 3;
    unsigned degree_bound = 0;
    unsigned depth = 1;
    std::size_t cap = kDefaultNodeCap;
    std::string adjoin;
    std::string target;
    std::string input = "-";
    std::vector<std::string> positional;
    std::vector<std::string> gen_flags;
    std::vector<std::string> ideal_flags;
    std::vector<std::string> algebra_flags;
    bool json = false;
};

// Signals a failed check that has already been reported on stdout.
struct Failed {};

class Runner {
public:
    Runner(const Options& o, std::istream& in, std::ostream& out) : o_(o), in_(in), out_(out) {}

    void bracket_cmd() {
        const Derivation r = bracket(derivation(0), derivation(1));
        emit({{"command", "bracket"}, {"n", o_.n}, {"result", to_string(r)}}, to_string(r));
    }

    void apply_cmd() {
        const Polynomial r = apply(derivation(0), parse_polynomial(o_.positional.at(1), o_.n));
        emit({{"command", "apply"}, {"n", o_.n}, {"result", to_string(r)}}, to_string(r));
    }

    void grade_cmd() {
        const Derivation d = derivation(0);
        const auto direct = homogeneous_components(d);
        const EulerPeel peel = peel_via_euler(d);
        const bool agree = direct == peel.components;

        json parts = json::array();
        std::string text;
        for (const auto& c : direct) {
            parts.push_back({{"degree", c.degree}, {"part", to_string(c.part)}});
            text += std::to_string(c.degree) + ": " + to_string(c.part) + "\n";
        }
        json peeled = json::array();
        for (const auto& c : peel.components) peeled.push_back({{"degree", c.degree}, {"part", to_string(c.part)}});
        text += "euler peeling: " + std::to_string(peel.steps) + " steps, " + (agree ? "agrees" : "DISAGREES");
        emit({{"command", "grade"},
              {"n", o_.n},
              {"components", parts},
              {"euler_components", peeled},
              {"euler_steps", peel.steps},
              {"agree", agree}},
             text);
        if (!agree) throw Failed{};
    }

    void member_cmd() {
        const SubalgebraSpec spec = parse_spec(o_.spec);
        const Derivation d = parse_derivation(o_.positional.at(0), spec.dimension());
        const bool m = member(spec, d);
        emit({{"command", "member"}, {"spec", to_string(spec)}, {"derivation", to_string(d)}, {"member", m}},
             m ? "true" : "false");
    }

    void generators_cmd() {
        const SubalgebraSpec spec = parse_spec(o_.spec);
        json list = json::array();
        std::string text;
        for (const auto& g : generators(spec, o_.degree_bound)) {
            list.push_back(to_string(g));
            text += (text.empty() ? "" : "\n") + to_string(g);
        }
        emit({{"command", "generators"}, {"spec", to_string(spec)}, {"degree_bound", o_.degree_bound}, {"generators", list}},
             text);
    }

    void project_cmd() {
        const Derivation r = project_quotient(derivation(0), o_.s);
        emit({{"command", "project"}, {"n", o_.n}, {"s", o_.s}, {"result", to_string(r)}}, to_string(r));
    }

    void rank_cmd() {
        const auto gens = derivations(o_.positional);
        const RankReport r = rank(gens);
        json j = rank_report_to_json(r);
        j["command"] = "rank";
        j["n"] = o_.n;
        std::string rows;
        std::string cols;
        for (auto i : r.pivot_rows) rows += " " + std::to_string(i + 1);
        for (auto i : r.pivot_cols) cols += " " + std::to_string(i + 1);
        emit(j, "rank: " + std::to_string(r.rank) + "\npivot rows:" + rows + "\npivot columns:" + cols +
                    "\nfinal pivot: " + to_string(r.final_pivot));
    }

    void rank_oracle_cmd() {
        const auto gens = derivations(o_.positional);
        const std::size_t numeric = rank_numeric_oracle(gens, o_.trials, *o_.seed);
        const std::size_t symbolic = rank(gens).rank;
        emit({{"command", "rank-oracle"},
              {"n", o_.n},
              {"seed", *o_.seed},
              {"trials", o_.trials},
              {"oracle_rank", numeric},
              {"symbolic_rank", symbolic}},
             "oracle rank: " + std::to_string(numeric) + "\nsymbolic rank: " + std::to_string(symbolic));
    }

    void conductor_cmd() {
        const Polynomial h = conductor(derivations(o_.positional));
        emit({{"command", "conductor"}, {"n", o_.n}, {"conductor", to_string(h)}}, to_string(h));
    }

    void module_member_cmd() {
        const auto gens = derivations(o_.gen_flags);
        const Derivation d = derivation(0);
        const auto coords = module_coordinates(gens, d);
        json j = {{"command", "module-member"}, {"n", o_.n}, {"derivation", to_string(d)}, {"member", coords.has_value()}};
        j["coordinates"] = nullptr;
        std::string text = coords ? "true" : "false";
        if (coords) {
            j["coordinates"] = json::array();
            text += "\ncoordinates:";
            for (const auto& h : *coords) {
                j["coordinates"].push_back(to_string(h));
                text += " " + to_string(h) + ";";
            }
            text.pop_back();
        }
        emit(j, text);
    }

    void il_cmd() {
        std::vector<Polynomial> ideal;
        for (const auto& f : o_.ideal_flags) ideal.push_back(parse_polynomial(f, o_.n));
        const auto algebra = derivations(o_.algebra_flags);
        const SubalgebraSpec spec = il_product(ideal, algebra);
        const auto& module = std::get<SubalgebraSpec::IlProduct>(spec.kind()).module_gens;
        const std::size_t rank_il = rank(module).rank;
        const std::size_t rank_l = rank(algebra).rank;

        json list = json::array();
        std::string text = "spec: " + to_string(spec);
        for (const auto& g : module) {
            list.push_back(to_string(g));
            text += "\n" + to_string(g);
        }
        text += "\nrank IL: " + std::to_string(rank_il) + "\nrank L: " + std::to_string(rank_l);
        emit({{"command", "il"},
              {"n", o_.n},
              {"spec", to_string(spec)},
              {"generators", list},
              {"rank_il", rank_il},
              {"rank_l", rank_l}},
             text);
    }

    void contain_cmd() {
        const SubalgebraSpec inner = parse_spec(o_.inner);
        const SubalgebraSpec outer = parse_spec(o_.outer);
        const ContainmentReport r = containment_sample(inner, outer, o_.degree_bound);
        json j = {{"command", "contain"},
                  {"inner", to_string(inner)},
                  {"outer", to_string(outer)},
                  {"degree_bound", o_.degree_bound},
                  {"holds", r.holds}};
        j["counterexample"] = r.counterexample ? json(to_string(*r.counterexample)) : json(nullptr);
        emit(j, r.holds ? "holds" : "fails: " + to_string(*r.counterexample));
    }

    void maximality_cmd() {
        certificate_out(maximality_certificate(o_.n, o_.s, parse_derivation(o_.adjoin, o_.n),
                                               parse_derivation(o_.target, o_.n)));
    }

    void ideal_gen_cmd() {
        certificate_out(minimal_ideal_certificate(o_.n, o_.s, parse_derivation(o_.adjoin, o_.n),
                                                  parse_derivation(o_.target, o_.n)));
    }

    void derived_witness_cmd() {
        const SubalgebraSpec spec = parse_spec(o_.spec);
        const DerivedSearchResult r = derived_lower_bound_witness(spec, o_.depth, o_.degree_bound, o_.cap);
        const json search = {{"degree_bound", r.degree_bound},
                             {"pool_size", r.pool_size},
                             {"nodes", r.nodes},
                             {"cap_reached", r.cap_reached}};
        if (!r.witness) {
            emit({{"command", "derived-witness"},
                  {"spec", to_string(spec)},
                  {"depth", r.depth},
                  {"found", false},
                  {"search", search}},
                 std::string("not found") + (r.cap_reached ? " (node cap reached)" : " (search space exhausted)") +
                     " after " + std::to_string(r.nodes) + " brackets");
            throw Failed{};
        }
        json j = witness_to_json(*r.witness);
        j["search"] = search;
        std::ostringstream text;
        text << "value: " << j["value"].get<std::string>() << "\n";
        render(*r.witness->tree, 0, text);
        text << "brackets evaluated: " << r.nodes;
        emit(j, text.str());
    }

    // Trusted path only: parse, then hand to the verifiers. No engine code.
    void verify_cmd() {
        json doc;
        if (o_.input == "-") {
            doc = json::parse(in_);
        } else {
            std::ifstream file(o_.input);
            if (!file) throw std::invalid_argument("cannot open " + o_.input);
            doc = json::parse(file);
        }
        if (!doc.is_object() || !doc.contains("kind")) throw FormatError("document has no 'kind'");

        json result = {{"command", "verify"}, {"kind", doc["kind"]}};
        std::string text;
        bool valid = false;
        if (doc["kind"] == "certificate") {
            const VerificationReport report = verify_certificate(certificate_from_json(doc));
            valid = report.valid;
            result["failures"] = json::array();
            for (const auto& f : report.failures) {
                result["failures"].push_back({{"kind", to_string(f.kind)}, {"detail", f.detail}});
                text += "\n" + to_string(f.kind) + ": " + f.detail;
            }
        } else if (doc["kind"] == "derived_witness") {
            valid = verify_derived_witness(witness_from_json(doc));
            result["failures"] = json::array();
            if (!valid) {
                result["failures"].push_back({{"kind", "witness"}, {"detail", "not a nonzero balanced tree over the spec"}});
                text += "\nwitness: not a nonzero balanced tree over the spec";
            }
        } else {
            throw FormatError("unknown document kind");
        }
        result["valid"] = valid;
        emit(result, (valid ? "valid" : "invalid") + text);
        if (!valid) throw Failed{};
    }

private:
    Derivation derivation(std::size_t i) const { return parse_derivation(o_.positional.at(i), o_.n); }

    std::vector<Derivation> derivations(const std::vector<std::string>& texts) const {
        std::vector<Derivation> out;
        for (const auto& t : texts) out.push_back(parse_derivation(t, o_.n));
        return out;
    }

    void emit(const json& j, const std::string& text) {
        if (o_.json)
            out_ << j.dump(2) << "\n";
        else
            out_ << text << "\n";
    }

    static void render(const BracketExpr& e, int indent, std::ostream& os) {
        const std::string pad(2 * indent, ' ');
        if (const auto* leaf = std::get_if<BracketExpr::Leaf>(&e.node)) {
            if (const auto* in = std::get_if<InSpec>(&leaf->claim))
                os << pad << "in " << to_string(in->spec) << ": " << to_string(leaf->derivation) << "\n";
            else
                os << pad << "given: " << to_string(leaf->derivation) << "\n";
        } else if (const auto* br = std::get_if<BracketExpr::Bracket>(&e.node)) {
            os << pad << "bracket\n";
            render(*br->left, indent + 1, os);
            render(*br->right, indent + 1, os);
        } else {
            os << pad << "sum\n";
            for (const auto& [c, t] : std::get<BracketExpr::LinComb>(e.node).terms) {
                os << pad << "  times " << to_string(c) << "\n";
                render(*t, indent + 2, os);
            }
        }
    }

    void certificate_out(const Certificate& cert) {
        if (o_.json) {
            out_ << certificate_to_json(cert).dump(2) << "\n";
            return;
        }
        out_ << "target: " << to_string(cert.target) << "\n";
        out_ << "context: " << to_string(cert.context) << "\n";
        if (cert.given) out_ << "given: " << to_string(*cert.given) << "\n";
        render(*cert.expr, 0, out_);
    }

    const Options& o_;
    std::istream& in_;
    std::ostream& out_;
};

using Handler = void (Runner::*)();

CLI::App* add(CLI::App& app, std::vector<std::pair<CLI::App*, Handler>>& table, const char* name, const char* about,
              Handler h, Options& o) {
    CLI::App* sub = app.add_subcommand(name, about);
    sub->add_flag("--json", o.json, "Emit a JSON report");
    table.emplace_back(sub, h);
    return sub;
}

void dimension(CLI::App* sub, Options& o) {
    sub->add_option("-n", o.n, "Number of variables")->required()->check(CLI::PositiveNumber);
}

void repeated(CLI::App* sub, const char* name, std::vector<std::string>& into, const char* about) {
    sub->add_option(name, into, about)->required()->expected(1)->allow_extra_args(false)->multi_option_policy(
        CLI::MultiOptionPolicy::TakeAll);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact computations in the Lie algebra W_n of polynomial vector fields", "derlie"};
    app.require_subcommand(1);
    std::vector<std::pair<CLI::App*, Handler>> table;

    auto* sub = add(app, table, "bracket", "Lie bracket [A, B]", &Runner::bracket_cmd, o);
    dimension(sub, o);
    sub->add_option("derivations", o.positional, "A and B")->required()->expected(2);

    sub = add(app, table, "apply", "Apply a derivation to a polynomial", &Runner::apply_cmd, o);
    dimension(sub, o);
    sub->add_option("operands", o.positional, "D and f")->required()->expected(2);

    sub = add(app, table, "grade", "Homogeneous components, directly and by Euler peeling", &Runner::grade_cmd, o);
    dimension(sub, o);
    sub->add_option("derivation", o.positional)->required()->expected(1);

    sub = add(app, table, "member", "Membership in a named subalgebra", &Runner::member_cmd, o);
    sub->add_option("--spec", o.spec, "Spec key, e.g. ms(3,1)")->required();
    sub->add_option("derivation", o.positional)->required()->expected(1);

    sub = add(app, table, "generators", "Monomial members up to a coefficient degree", &Runner::generators_cmd, o);
    sub->add_option("--spec", o.spec)->required();
    sub->add_option("--degree-bound", o.degree_bound)->required();

    sub = add(app, table, "project", "Quotient map m_s -> W_s", &Runner::project_cmd, o);
    dimension(sub, o);
    sub->add_option("-s", o.s)->required();
    sub->add_option("derivation", o.positional)->required()->expected(1);

    sub = add(app, table, "rank", "Rank over P_n by fraction-free elimination", &Runner::rank_cmd, o);
    dimension(sub, o);
    sub->add_option("derivations", o.positional)->required();

    sub = add(app, table, "rank-oracle", "Rank at random integer points", &Runner::rank_oracle_cmd, o);
    dimension(sub, o);
    sub->add_option("--seed", o.seed, "Random seed (required)")->required();
    sub->add_option("--trials", o.trials, "Number of random points")->capture_default_str();
    sub->add_option("derivations", o.positional)->required();

    sub = add(app, table, "conductor", "det of n derivations: h with h*W_n in their span", &Runner::conductor_cmd, o);
    dimension(sub, o);
    sub->add_option("derivations", o.positional)->required();

    sub = add(app, table, "module-member", "Membership in the module of n nonsingular generators",
              &Runner::module_member_cmd, o);
    dimension(sub, o);
    repeated(sub, "--gen", o.gen_flags, "Module generator (repeat n times)");
    sub->add_option("derivation", o.positional)->required()->expected(1);

    sub = add(app, table, "il", "Module generators of I*L", &Runner::il_cmd, o);
    dimension(sub, o);
    repeated(sub, "--ideal", o.ideal_flags, "Ideal generator (repeatable)");
    repeated(sub, "--algebra", o.algebra_flags, "Algebra generator (repeatable)");

    sub = add(app, table, "contain", "Sample containment inner <= outer on generators", &Runner::contain_cmd, o);
    sub->add_option("--inner", o.inner)->required();
    sub->add_option("--outer", o.outer)->required();
    sub->add_option("--degree-bound", o.degree_bound)->required();

    sub = add(app, table, "maximality", "Certificate that target lies in <m_s, D>", &Runner::maximality_cmd, o);
    dimension(sub, o);
    sub->add_option("-s", o.s)->required();
    sub->add_option("--adjoin", o.adjoin, "D outside m_s")->required();
    sub->add_option("--target", o.target)->required();

    sub = add(app, table, "ideal-gen", "Certificate that target lies in the m_s-ideal generated by D",
              &Runner::ideal_gen_cmd, o);
    dimension(sub, o);
    sub->add_option("-s", o.s)->required();
    sub->add_option("--adjoin,--generator", o.adjoin, "Nonzero D in I_s")->required();
    sub->add_option("--target", o.target)->required();

    sub = add(app, table, "derived-witness", "Search a nonzero balanced bracket tree", &Runner::derived_witness_cmd, o);
    sub->add_option("--spec", o.spec)->required();
    sub->add_option("--depth", o.depth)->required()->check(CLI::PositiveNumber);
    sub->add_option("--degree-bound", o.degree_bound)->required();
    sub->add_option("--cap", o.cap, "Maximum bracket evaluations")->capture_default_str();

    sub = add(app, table, "verify", "Check a certificate or derived witness (JSON)", &Runner::verify_cmd, o);
    sub->add_option("input", o.input, "File, or - for stdin")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const auto it = std::find_if(table.begin(), table.end(), [](const auto& entry) { return entry.first->parsed(); });
    Runner runner(o, in, out);
    try {
        (runner.*(it->second))();
        return kExitOk;
    } catch (const Failed&) {
        return kExitFailed;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
    } catch (const json::exception& e) {
        err << "invalid JSON: " << e.what() << "\n";
    } catch (const FormatError& e) {
        err << "invalid document: " << e.what() << "\n";
    } catch (const UnsupportedQuery& e) {
        err << "unsupported: " << e.what() << "\n";
    } catch (const NoConductor& e) {
        err << "no conductor: " << e.what() << "\n";
        return kExitFailed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitFailed;
    }
    return kExitUsage;
}

}  // namespace derlie
