#pragma once

#include <fgs/io.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

namespace fgs {

namespace clidetail {

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw io_error("malformed JSON in " + path + ": " + e.what());
    }
}

inline RingSpec parse_coeff_ring(const std::string& s) {
    if (s == "Z") return RingSpec::integers();
    if (s == "Q") return RingSpec::rationals();
    std::string digits;
    if (s.size() >= 2 && s[0] == 'F')
        digits = s.substr(1);
    else if (s.size() >= 3 && s.compare(0, 2, "Z/") == 0)
        digits = s.substr(2);
    else
        throw io_error("coefficient spec: expected Z, Q, F<m>, or Z/<m>, got \"" + s + "\"");
    for (char ch : digits)
        if (ch < '0' || ch > '9') throw io_error("coefficient spec: bad modulus in \"" + s + "\"");
    if (digits.empty()) throw io_error("coefficient spec: missing modulus in \"" + s + "\"");
    return RingSpec::integers_mod(Int(digits));
}

inline Json factors_to_json(const ModulePresentation& p) {
    Json a = Json::array();
    for (const Int& f : p.factors) a.push_back(f.str());
    return a;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

/// Collected axiom violations for one block of a scheme file.
struct BlockReport {
    std::string block;
    std::vector<std::string> problems;
};

inline std::vector<BlockReport> validate_scheme(const LoadedScheme& s) {
    std::vector<BlockReport> reports;
    BlockReport hopf{"hopf", {}};
    for (const Violation& v : validate(s.hopf)) hopf.problems.push_back(v.describe());
    reports.push_back(std::move(hopf));
    if (s.module) {
        BlockReport mod{"module", {}};
        for (const Violation& v : validate_comodule(*s.module)) mod.problems.push_back(v.describe());
        reports.push_back(std::move(mod));
    }
    if (s.algebra) {
        BlockReport alg{"algebra", {}};
        const GradedComoduleAlgebra& a = *s.algebra;
        for (int d = 0; d <= a.cap; ++d)
            for (const Violation& v : validate_comodule(a.pieces[static_cast<size_t>(d)]))
                alg.problems.push_back("piece " + std::to_string(d) + ": " + v.describe());
        for (int i = 0; i <= a.cap; ++i)
            for (int j = 0; i + j <= a.cap; ++j) {
                const Comodule& target = a.pieces[static_cast<size_t>(i + j)];
                Comodule source = tensor_comodule(a.pieces[static_cast<size_t>(i)], a.pieces[static_cast<size_t>(j)]);
                if (!is_comodule_morphism(source, target, a.product(i, j)))
                    alg.problems.push_back("product (" + std::to_string(i) + "," + std::to_string(j) +
                                           ") is not a comodule morphism");
            }
        reports.push_back(std::move(alg));
    }
    return reports;
}

inline int cmd_validate(const LoadedScheme& s, bool json, std::ostream& out) {
    std::vector<BlockReport> reports = validate_scheme(s);
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.problems.empty();
    if (json) {
        Json j = Json::object();
        Json blocks = Json::array();
        for (const auto& r : reports) {
            Json b = Json::object();
            b["block"] = r.block;
            b["ok"] = r.problems.empty();
            Json probs = Json::array();
            for (const std::string& p : r.problems) probs.push_back(p);
            b["violations"] = std::move(probs);
            blocks.push_back(std::move(b));
        }
        j["blocks"] = std::move(blocks);
        j["ok"] = ok;
        print_json(out, j);
    } else {
        for (const auto& r : reports) {
            if (r.problems.empty()) {
                out << r.block << ": ok\n";
            } else {
                out << r.block << ": " << r.problems.size() << " violation(s)\n";
                for (const std::string& p : r.problems) out << "  - " << p << "\n";
            }
        }
        out << "result: " << (ok ? "valid" : "invalid") << "\n";
    }
    return ok ? 0 : 1;
}

inline int cmd_integral(const LoadedScheme& s, bool json, std::ostream& out) {
    IntegralResult r = left_integrals(s.hopf);
    if (json) {
        Json j = Json::object();
        Json gen = Json::array();
        for (const Rat& c : r.generator.coeffs) gen.push_back(iodetail::scalar_to_string(c));
        j["generator"] = std::move(gen);
        j["value_at_one"] = iodetail::scalar_to_string(r.value_at_one);
        j["free_rank_one"] = r.is_free_rank_one;
        j["summand"] = r.is_summand;
        print_json(out, j);
    } else {
        out << "integral generator (dual-basis coordinates): [";
        for (size_t i = 0; i < r.generator.coeffs.size(); ++i)
            out << (i ? ", " : "") << iodetail::scalar_to_string(r.generator.coeffs[i]);
        out << "]\n";
        out << "psi(1) = " << iodetail::scalar_to_string(r.value_at_one) << "\n";
        out << "free rank one: " << yes_no(r.is_free_rank_one) << "\n";
        out << "direct summand: " << yes_no(r.is_summand) << "\n";
    }
    return 0;
}

inline int cmd_bound(const LoadedScheme& s, bool json, std::ostream& out) {
    Int n = torsion_bound(s.hopf);
    std::string path = s.hopf.ring.is_mod() ? "characteristic" : "integral";
    if (json) {
        Json j = Json::object();
        j["bound"] = n.str();
        j["path"] = path;
        print_json(out, j);
    } else {
        out << "torsion bound n = " << n.str() << "\n";
        out << "path: " << path << "\n";
    }
    return 0;
}

inline int cmd_cohomology(const LoadedScheme& s, const std::string& module_spec, int max_degree,
                          long long size_limit, bool json, std::ostream& out) {
    const HopfAlgebra& h = s.hopf;
    Comodule m = !module_spec.empty() ? parse_module_spec(h, module_spec)
                                      : (s.module ? *s.module : trivial_comodule(h, 1));
    Int n = torsion_bound(h);
    std::string path = h.ring.is_mod() ? "characteristic" : "integral";
    CochainComplex c = build_complex(h, m, max_degree, size_limit);
    std::vector<ModulePresentation> table;
    table.reserve(static_cast<size_t>(max_degree) + 1);
    for (int i = 0; i <= max_degree; ++i) table.push_back(cohomology_at(c, i));
    bool all_ok = true;
    std::vector<bool> verdicts(static_cast<size_t>(max_degree) + 1, true);
    for (int i = 1; i <= max_degree; ++i) {
        for (const Int& f : table[static_cast<size_t>(i)].factors)
            if (!h.ring.in_ideal(n, f)) verdicts[static_cast<size_t>(i)] = false;
        all_ok = all_ok && verdicts[static_cast<size_t>(i)];
    }
    if (json) {
        Json j = Json::object();
        j["ring"] = h.ring.name();
        j["coefficient_rank"] = m.rank;
        j["bound"] = n.str();
        j["path"] = path;
        j["max_degree"] = max_degree;
        Json rows = Json::array();
        for (int i = 0; i <= max_degree; ++i) {
            Json row = Json::object();
            row["degree"] = i;
            row["presentation"] = table[static_cast<size_t>(i)].to_string();
            row["factors"] = factors_to_json(table[static_cast<size_t>(i)]);
            if (i == 0)
                row["annihilated"] = nullptr;
            else
                row["annihilated"] = static_cast<bool>(verdicts[static_cast<size_t>(i)]);
            rows.push_back(std::move(row));
        }
        j["table"] = std::move(rows);
        j["all_annihilated"] = all_ok;
        print_json(out, j);
    } else {
        out << "ring: " << h.ring.name() << "\n";
        out << "coefficients: rank " << m.rank << "\n";
        out << "torsion bound n = " << n.str() << " (path: " << path << ")\n";
        size_t width = 1;
        for (const auto& p : table) width = std::max(width, p.to_string().size());
        for (int i = 0; i <= max_degree; ++i) {
            out << "H^" << std::left << std::setw(4) << i << std::setw(static_cast<int>(width) + 2)
                << table[static_cast<size_t>(i)].to_string()
                << (i == 0 ? "-" : (verdicts[static_cast<size_t>(i)] ? "annihilated by n" : "NOT annihilated"))
                << "\n";
        }
        if (all_ok)
            out << "all degrees 1.." << max_degree << " verified\n";
        else
            out << "FAILED: torsion above the bound\n";
    }
    return all_ok ? 0 : 1;
}

inline int cmd_ring(const LoadedScheme& s, const std::string& algebra_spec, int max_degree,
                    long long size_limit, bool check_generation, bool json, std::ostream& out) {
    const HopfAlgebra& h = s.hopf;
    GradedComoduleAlgebra alg =
        !algebra_spec.empty()
            ? parse_algebra_spec(h, algebra_spec)
            : (s.algebra ? *s.algebra : graded_algebra_from_action(trivial_comodule(h, 0), 0));
    CohomologyRingTable t = cohomology_ring(h, alg, max_degree, size_limit);
    std::optional<GenerationReport> gen;
    if (check_generation) gen = generation_degree(t);
    if (json) {
        Json j = Json::object();
        j["ring"] = h.ring.name();
        j["max_degree"] = max_degree;
        j["cap"] = t.cap;
        Json rows = Json::array();
        for (const auto& [key, entry] : t.entries) {
            Json row = Json::object();
            row["cdegree"] = key.first;
            row["adegree"] = key.second;
            row["presentation"] = entry.basis.presentation().to_string();
            row["factors"] = factors_to_json(entry.basis.presentation());
            rows.push_back(std::move(row));
        }
        j["table"] = std::move(rows);
        Json prods = Json::array();
        for (const auto& [key, coords] : t.products) {
            Json p = Json::object();
            p["left"] = Json::array({key[0], key[1], key[2]});
            p["right"] = Json::array({key[3], key[4], key[5]});
            Json cs = Json::array();
            for (const Rat& c : coords) cs.push_back(iodetail::scalar_to_string(c));
            p["coords"] = std::move(cs);
            prods.push_back(std::move(p));
        }
        j["products"] = std::move(prods);
        if (gen) {
            Json g = Json::object();
            if (gen->degree)
                g["degree"] = *gen->degree;
            else
                g["degree"] = nullptr;
            Json ws = Json::array();
            for (const ClassRef& w : gen->witnesses)
                ws.push_back(Json::array({w.cdegree, w.adegree, w.index}));
            g["witnesses"] = std::move(ws);
            j["generation"] = std::move(g);
        } else {
            j["generation"] = nullptr;
        }
        j["truncation"] = "cohomological degree <= " + std::to_string(max_degree) +
                          ", internal degree <= " + std::to_string(t.cap);
        print_json(out, j);
    } else {
        out << "bigraded cohomology of the truncated algebra (ring: " << h.ring.name() << ")\n";
        size_t width = 2;
        for (const auto& [key, entry] : t.entries)
            width = std::max(width, entry.basis.presentation().to_string().size());
        out << std::left << std::setw(6) << " ";
        for (int j = 0; j <= t.cap; ++j) out << std::setw(static_cast<int>(width) + 2) << ("j=" + std::to_string(j));
        out << "\n";
        for (int i = 0; i <= max_degree; ++i) {
            out << std::left << std::setw(6) << ("i=" + std::to_string(i));
            for (int j = 0; j <= t.cap; ++j)
                out << std::setw(static_cast<int>(width) + 2) << t.entry(i, j).basis.presentation().to_string();
            out << "\n";
        }
        out << "nonzero products of recorded classes:\n";
        bool any = false;
        for (const auto& [key, coords] : t.products) {
            bool nonzero = false;
            for (const Rat& c : coords) nonzero = nonzero || c != 0;
            if (!nonzero) continue;
            any = true;
            out << "  (" << key[0] << "," << key[1] << ")[" << key[2] << "] * (" << key[3] << ","
                << key[4] << ")[" << key[5] << "] = [";
            for (size_t i = 0; i < coords.size(); ++i)
                out << (i ? ", " : "") << iodetail::scalar_to_string(coords[i]);
            out << "]\n";
        }
        if (!any) out << "  (none)\n";
        if (gen) {
            if (gen->degree)
                out << "generation degree: " << *gen->degree << "\n";
            else
                out << "generation degree: not reached within the truncation\n";
            out << "witnesses:";
            for (const ClassRef& w : gen->witnesses)
                out << " (" << w.cdegree << "," << w.adegree << ")[" << w.index << "]";
            out << "\n";
        }
        out << "note: computed in the truncated range i <= " << max_degree << ", j <= " << t.cap
            << "; statements beyond this range are not checked\n";
    }
    return (check_generation && gen && !gen->degree) ? 1 : 0;
}

inline int cmd_oracle(const CayleyTable& table, const RingSpec& ring, int max_degree,
                      long long size_limit, bool json, std::ostream& out) {
    std::vector<ExactMatrix> action(static_cast<size_t>(table.order()), ExactMatrix::identity(ring, 1));
    std::vector<ModulePresentation> results = bar_complex_oracle(table, action, max_degree, size_limit);
    if (json) {
        Json j = Json::object();
        j["order"] = table.order();
        j["ring"] = ring.name();
        j["max_degree"] = max_degree;
        Json rows = Json::array();
        for (int i = 0; i <= max_degree; ++i) {
            Json row = Json::object();
            row["degree"] = i;
            row["presentation"] = results[static_cast<size_t>(i)].to_string();
            row["factors"] = factors_to_json(results[static_cast<size_t>(i)]);
            rows.push_back(std::move(row));
        }
        j["table"] = std::move(rows);
        print_json(out, j);
    } else {
        out << "bar complex for a group of order " << table.order() << " over " << ring.name() << "\n";
        for (int i = 0; i <= max_degree; ++i)
            out << "H^" << i << "  " << results[static_cast<size_t>(i)].to_string() << "\n";
    }
    return 0;
}

}  // namespace clidetail

/// Entry point shared by the binary and the tests. args excludes the program
/// name. Exit codes: 0 success/verified, 1 verification failure, 2 input error.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using namespace clidetail;
    CLI::App app{"exact invariants, integrals, and cohomology of finite group schemes"};
    app.require_subcommand(1);

    std::string file;
    bool json = false;
    int max_degree = 3;
    long long size_limit = 5000;
    std::string module_spec;
    std::string algebra_spec;
    bool check_generation = false;
    int cyclic_order = 0;
    std::string table_file;
    std::string coeff = "Z";

    CLI::App* validate_cmd = app.add_subcommand("validate", "check the axioms of a scheme file");
    validate_cmd->add_option("file", file, "input scheme file")->required();
    validate_cmd->add_flag("--json", json, "machine-readable output");

    CLI::App* integral_cmd = app.add_subcommand("integral", "compute a generator of the left integrals");
    integral_cmd->add_option("file", file, "input scheme file")->required();
    integral_cmd->add_flag("--json", json, "machine-readable output");

    CLI::App* bound_cmd = app.add_subcommand("bound", "compute the torsion bound and its provenance");
    bound_cmd->add_option("file", file, "input scheme file")->required();
    bound_cmd->add_flag("--json", json, "machine-readable output");

    CLI::App* cohomology_cmd =
        app.add_subcommand("cohomology", "cohomology table with per-degree annihilation verdicts");
    cohomology_cmd->add_option("file", file, "input scheme file")->required();
    cohomology_cmd->add_option("--max-degree", max_degree, "top cohomological degree")
        ->check(CLI::Range(0, 64));
    cohomology_cmd->add_option("--module", module_spec,
                               "coefficients: trivial[:d] | regular | dual:<spec> | tensor:<spec>,<spec>");
    cohomology_cmd->add_option("--size-limit", size_limit, "largest allowed cochain rank");
    cohomology_cmd->add_flag("--json", json, "machine-readable output");

    CLI::App* ring_cmd = app.add_subcommand("ring", "bigraded cohomology ring table of a graded algebra");
    ring_cmd->add_option("file", file, "input scheme file")->required();
    ring_cmd->add_option("--max-degree", max_degree, "top cohomological degree")->check(CLI::Range(0, 64));
    ring_cmd->add_option("--algebra", algebra_spec, "algebra: trivial | sym:<module spec>:<cap>");
    ring_cmd->add_option("--size-limit", size_limit, "largest allowed cochain rank");
    ring_cmd->add_flag("--check-generation", check_generation, "report the generation degree with witnesses");
    ring_cmd->add_flag("--json", json, "machine-readable output");

    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "group cohomology via the bar complex, for cross-checking");
    CLI::Option* cyc = oracle_cmd->add_option("--cyclic", cyclic_order, "cyclic group of this order")
                           ->check(CLI::Range(1, 1000));
    CLI::Option* tab = oracle_cmd->add_option("--table", table_file, "JSON file with a multiplication table");
    cyc->excludes(tab);
    oracle_cmd->add_option("--coeff", coeff, "coefficient ring: Z | Q | F<m> | Z/<m>");
    oracle_cmd->add_option("--max-degree", max_degree, "top cohomological degree")->check(CLI::Range(0, 64));
    oracle_cmd->add_option("--size-limit", size_limit, "largest allowed cochain rank");
    oracle_cmd->add_flag("--json", json, "machine-readable output");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (oracle_cmd->parsed()) {
            if (cyclic_order == 0 && table_file.empty())
                throw io_error("oracle: pass one of --cyclic or --table");
            CayleyTable table =
                cyclic_order > 0 ? CayleyTable::cyclic(cyclic_order) : parse_cayley_table(read_json_file(table_file));
            return cmd_oracle(table, parse_coeff_ring(coeff), max_degree, size_limit, json, out);
        }
        LoadedScheme s = load_scheme_file(file);
        if (validate_cmd->parsed()) return cmd_validate(s, json, out);
        if (integral_cmd->parsed()) return cmd_integral(s, json, out);
        if (bound_cmd->parsed()) return cmd_bound(s, json, out);
        if (cohomology_cmd->parsed())
            return cmd_cohomology(s, module_spec, max_degree, size_limit, json, out);
        if (ring_cmd->parsed())
            return cmd_ring(s, algebra_spec, max_degree, size_limit, check_generation, json, out);
        err << "no subcommand selected\n";
        return 2;
    } catch (const io_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace fgs
