#pragma once

#include <fgs/cohomology.hpp>

#include <json.hpp>

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace fgs {

using Json = nlohmann::ordered_json;

/// Input-format problem: malformed JSON, schema violation, bad index or flag.
/// Distinct from fgs::error so callers can map the two to different exit codes.
struct io_error : error {
    explicit io_error(const std::string& what) : error(what) {}
};

/// One parsed input file: a Hopf algebra plus optional coefficient data.
struct LoadedScheme {
    HopfAlgebra hopf;
    std::optional<Comodule> module;
    std::optional<GradedComoduleAlgebra> algebra;
};

namespace iodetail {

inline void expect_object(const Json& j, const std::string& where) {
    if (!j.is_object()) throw io_error(where + ": expected a JSON object");
}

inline void reject_unknown_keys(const Json& j, const std::set<std::string>& allowed,
                                const std::string& where) {
    for (const auto& item : j.items())
        if (!allowed.count(item.key())) throw io_error(where + ": unknown key \"" + item.key() + "\"");
}

inline const Json& require_key(const Json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key)) throw io_error(where + ": missing key \"" + key + "\"");
    return j.at(key);
}

inline long long parse_index(const Json& j, const std::string& where) {
    if (!j.is_number_integer() && !j.is_number_unsigned())
        throw io_error(where + ": expected an integer");
    return j.get<long long>();
}

inline int parse_bounded_index(const Json& j, long long lo, long long hi, const std::string& where) {
    long long v = parse_index(j, where);
    if (v < lo || v >= hi)
        throw io_error(where + ": index " + std::to_string(v) + " out of range [" +
                       std::to_string(lo) + ", " + std::to_string(hi) + ")");
    return static_cast<int>(v);
}

inline Int parse_int_string(const std::string& s, const std::string& where) {
    size_t pos = 0;
    if (pos < s.size() && s[pos] == '-') ++pos;
    if (pos >= s.size()) throw io_error(where + ": \"" + s + "\" is not a decimal integer");
    for (; pos < s.size(); ++pos)
        if (s[pos] < '0' || s[pos] > '9')
            throw io_error(where + ": \"" + s + "\" is not a decimal integer");
    return Int(s);
}

/// Scalars are decimal strings (optionally "p/q") or plain JSON integers.
/// Floats are rejected: they cannot represent exact ring elements.
inline Rat parse_scalar(const Json& j, const std::string& where) {
    if (j.is_number_integer() || j.is_number_unsigned()) return Rat(Int(j.get<long long>()));
    if (j.is_number_float()) throw io_error(where + ": floating-point scalars are not allowed");
    if (!j.is_string()) throw io_error(where + ": expected an integer or a decimal string");
    std::string s = j.get<std::string>();
    size_t slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int_string(s, where));
    Int num = parse_int_string(s.substr(0, slash), where);
    Int den = parse_int_string(s.substr(slash + 1), where);
    if (den == 0) throw io_error(where + ": zero denominator");
    return Rat(num, den);
}

inline std::string scalar_to_string(const Rat& x) {
    Int d = rat_den(x);
    return d == 1 ? rat_num(x).str() : rat_num(x).str() + "/" + d.str();
}

inline std::vector<Rat> parse_scalar_vector(const RingSpec& ring, const Json& j, int n,
                                            const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw io_error(where + ": expected an array of " + std::to_string(n) + " scalars");
    std::vector<Rat> out;
    out.reserve(static_cast<size_t>(n));
    for (const auto& v : j) out.push_back(ring.canonical(parse_scalar(v, where)));
    return out;
}

inline ExactMatrix parse_dense_matrix(const RingSpec& ring, const Json& j, int rows, int cols,
                                      const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw io_error(where + ": expected " + std::to_string(rows) + " rows");
    ExactMatrix m(ring, rows, cols);
    for (int i = 0; i < rows; ++i) {
        const Json& row = j.at(static_cast<size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw io_error(where + ": expected rows of " + std::to_string(cols) + " scalars");
        for (int k = 0; k < cols; ++k)
            m.set(i, k, parse_scalar(row.at(static_cast<size_t>(k)), where));
    }
    return m;
}

inline Json dense_matrix_to_json(const ExactMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline SparseTensor3 parse_tensor(const RingSpec& ring, const Json& j, int n0, int n1, int n2,
                                  const std::string& where) {
    if (!j.is_array()) throw io_error(where + ": expected an array of [i, j, k, c] entries");
    SparseTensor3 t;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 4)
            throw io_error(where + ": each entry must be [i, j, k, c]");
        int i = parse_bounded_index(e.at(0), 0, n0, where);
        int k1 = parse_bounded_index(e.at(1), 0, n1, where);
        int k2 = parse_bounded_index(e.at(2), 0, n2, where);
        Rat c = parse_scalar(e.at(3), where);
        t.set(ring, i, k1, k2, ring.canonical(t.at(i, k1, k2) + c));
    }
    return t;
}

inline Json tensor_to_json(const SparseTensor3& t) {
    Json out = Json::array();
    for (const auto& [k, c] : t.entries()) {
        if (c == 0) continue;
        out.push_back(Json::array({k[0], k[1], k[2], scalar_to_string(c)}));
    }
    return out;
}

inline std::vector<Json> json_list(const Json& j, const std::string& where) {
    if (!j.is_array()) throw io_error(where + ": expected an array");
    return std::vector<Json>(j.begin(), j.end());
}

}  // namespace iodetail

inline RingSpec parse_ring(const Json& j) {
    using namespace iodetail;
    expect_object(j, "ring");
    reject_unknown_keys(j, {"type", "m"}, "ring");
    const Json& tj = require_key(j, "type", "ring");
    if (!tj.is_string()) throw io_error("ring.type: expected a string");
    std::string type = tj.get<std::string>();
    if (type == "Z") {
        reject_unknown_keys(j, {"type"}, "ring");
        return RingSpec::integers();
    }
    if (type == "Q") {
        reject_unknown_keys(j, {"type"}, "ring");
        return RingSpec::rationals();
    }
    if (type == "Zmod") {
        const Json& mj = require_key(j, "m", "ring");
        Int m = mj.is_string() ? parse_int_string(mj.get<std::string>(), "ring.m")
                               : Int(parse_index(mj, "ring.m"));
        if (m < 2) throw io_error("ring.m: modulus must be >= 2");
        return RingSpec::integers_mod(m);
    }
    throw io_error("ring.type: expected \"Z\", \"Zmod\", or \"Q\"");
}

inline CayleyTable parse_group_name(const std::string& name) {
    if (name == "klein") return CayleyTable::klein();
    if (name == "s3") return CayleyTable::symmetric3();
    if (name.size() >= 2 && name[0] == 'C') {
        std::string rest = name.substr(1);
        for (char ch : rest)
            if (ch < '0' || ch > '9') throw io_error("unknown group name \"" + name + "\"");
        long long n = std::stoll(rest);
        if (n < 1 || n > 1000) throw io_error("cyclic group order out of range in \"" + name + "\"");
        return CayleyTable::cyclic(static_cast<int>(n));
    }
    throw io_error("unknown group name \"" + name + "\" (expected C<n>, klein, or s3)");
}

/// Group multiplication table from JSON: {"table": [[...]], "identity": i, "names": [...]}.
/// identity defaults to 0 and names to g0..g(n-1).
inline CayleyTable parse_cayley_table(const Json& j) {
    using namespace iodetail;
    expect_object(j, "group table");
    reject_unknown_keys(j, {"table", "identity", "names"}, "group table");
    const Json& tj = require_key(j, "table", "group table");
    if (!tj.is_array() || tj.empty()) throw io_error("group table: expected a nonempty array of rows");
    int n = static_cast<int>(tj.size());
    CayleyTable t;
    t.mul.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int g = 0; g < n; ++g) {
        const Json& row = tj.at(static_cast<size_t>(g));
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw io_error("group table: row " + std::to_string(g) + " must have " + std::to_string(n) + " entries");
        for (int h = 0; h < n; ++h)
            t.mul[static_cast<size_t>(g)][static_cast<size_t>(h)] =
                parse_bounded_index(row.at(static_cast<size_t>(h)), 0, n, "group table");
    }
    t.identity = j.contains("identity") ? parse_bounded_index(j.at("identity"), 0, n, "group table.identity") : 0;
    if (j.contains("names")) {
        const Json& names = j.at("names");
        if (!names.is_array() || static_cast<int>(names.size()) != n)
            throw io_error("group table.names: expected " + std::to_string(n) + " strings");
        for (const auto& s : names) {
            if (!s.is_string()) throw io_error("group table.names: expected strings");
            t.names.push_back(s.get<std::string>());
        }
    } else {
        for (int g = 0; g < n; ++g) t.names.push_back("g" + std::to_string(g));
    }
    std::string problem = t.check();
    if (!problem.empty()) throw io_error("group table: " + problem);
    return t;
}

inline HopfAlgebra parse_hopf(const RingSpec& ring, const Json& j) {
    using namespace iodetail;
    expect_object(j, "hopf");
    if (j.contains("constructor")) {
        const Json& cj = j.at("constructor");
        if (!cj.is_string()) throw io_error("hopf.constructor: expected a string");
        std::string ctor = cj.get<std::string>();
        if (ctor == "constant") {
            reject_unknown_keys(j, {"constructor", "group", "table"}, "hopf");
            if (j.contains("group") == j.contains("table"))
                throw io_error("hopf: constructor \"constant\" takes exactly one of \"group\" or \"table\"");
            if (j.contains("group")) {
                const Json& gj = j.at("group");
                if (!gj.is_string()) throw io_error("hopf.group: expected a string");
                return constant_group(parse_group_name(gj.get<std::string>()), ring);
            }
            return constant_group(parse_cayley_table(j.at("table")), ring);
        }
        if (ctor == "mu_n") {
            reject_unknown_keys(j, {"constructor", "n"}, "hopf");
            return mu_n(parse_bounded_index(require_key(j, "n", "hopf"), 1, 1001, "hopf.n"), ring);
        }
        if (ctor == "alpha_p") {
            reject_unknown_keys(j, {"constructor", "p"}, "hopf");
            return alpha_p(parse_bounded_index(require_key(j, "p", "hopf"), 2, 1001, "hopf.p"), ring);
        }
        if (ctor == "product") {
            reject_unknown_keys(j, {"constructor", "left", "right"}, "hopf");
            return direct_product(parse_hopf(ring, require_key(j, "left", "hopf")),
                                  parse_hopf(ring, require_key(j, "right", "hopf")));
        }
        throw io_error("hopf.constructor: unknown constructor \"" + ctor + "\"");
    }
    reject_unknown_keys(j, {"rank", "basis", "mult", "unit", "comult", "counit", "antipode"}, "hopf");
    HopfAlgebra h;
    h.ring = ring;
    h.rank = parse_bounded_index(require_key(j, "rank", "hopf"), 1, 10000, "hopf.rank");
    const Json& basis = require_key(j, "basis", "hopf");
    if (!basis.is_array() || static_cast<int>(basis.size()) != h.rank)
        throw io_error("hopf.basis: expected " + std::to_string(h.rank) + " strings");
    for (const auto& s : basis) {
        if (!s.is_string()) throw io_error("hopf.basis: expected strings");
        h.labels.push_back(s.get<std::string>());
    }
    h.mult = parse_tensor(ring, require_key(j, "mult", "hopf"), h.rank, h.rank, h.rank, "hopf.mult");
    h.comult = parse_tensor(ring, require_key(j, "comult", "hopf"), h.rank, h.rank, h.rank, "hopf.comult");
    h.unit = parse_scalar_vector(ring, require_key(j, "unit", "hopf"), h.rank, "hopf.unit");
    h.counit = parse_scalar_vector(ring, require_key(j, "counit", "hopf"), h.rank, "hopf.counit");
    h.antipode = parse_dense_matrix(ring, require_key(j, "antipode", "hopf"), h.rank, h.rank, "hopf.antipode");
    return h;
}

inline Comodule parse_module(const HopfAlgebra& h, const Json& j) {
    using namespace iodetail;
    expect_object(j, "module");
    if (j.contains("constructor")) {
        const Json& cj = j.at("constructor");
        if (!cj.is_string()) throw io_error("module.constructor: expected a string");
        std::string ctor = cj.get<std::string>();
        if (ctor == "trivial") {
            reject_unknown_keys(j, {"constructor", "rank"}, "module");
            int d = j.contains("rank") ? parse_bounded_index(j.at("rank"), 0, 10000, "module.rank") : 1;
            return trivial_comodule(h, d);
        }
        if (ctor == "regular") {
            reject_unknown_keys(j, {"constructor"}, "module");
            return regular_comodule(h);
        }
        if (ctor == "dual") {
            reject_unknown_keys(j, {"constructor", "of"}, "module");
            return dual_comodule(parse_module(h, require_key(j, "of", "module")));
        }
        if (ctor == "tensor") {
            reject_unknown_keys(j, {"constructor", "left", "right"}, "module");
            return tensor_comodule(parse_module(h, require_key(j, "left", "module")),
                                   parse_module(h, require_key(j, "right", "module")));
        }
        throw io_error("module.constructor: unknown constructor \"" + ctor + "\"");
    }
    reject_unknown_keys(j, {"rank", "coaction"}, "module");
    Comodule m{h, parse_bounded_index(require_key(j, "rank", "module"), 0, 10000, "module.rank"), {}};
    m.coaction =
        parse_tensor(h.ring, require_key(j, "coaction", "module"), m.rank, m.rank, h.rank, "module.coaction");
    return m;
}

inline GradedComoduleAlgebra parse_algebra(const HopfAlgebra& h, const Json& j) {
    using namespace iodetail;
    expect_object(j, "algebra");
    if (j.contains("constructor")) {
        const Json& cj = j.at("constructor");
        if (!cj.is_string()) throw io_error("algebra.constructor: expected a string");
        std::string ctor = cj.get<std::string>();
        if (ctor == "trivial") {
            reject_unknown_keys(j, {"constructor"}, "algebra");
            return graded_algebra_from_action(trivial_comodule(h, 0), 0);
        }
        if (ctor == "sym") {
            reject_unknown_keys(j, {"constructor", "module", "cap"}, "algebra");
            Comodule v = parse_module(h, require_key(j, "module", "algebra"));
            int cap = parse_bounded_index(require_key(j, "cap", "algebra"), 0, 64, "algebra.cap");
            return graded_algebra_from_action(v, cap);
        }
        throw io_error("algebra.constructor: unknown constructor \"" + ctor + "\"");
    }
    reject_unknown_keys(j, {"cap", "pieces", "unit", "products"}, "algebra");
    GradedComoduleAlgebra alg{h, {}, {}, ExactMatrix(h.ring, 0, 0), 0};
    alg.cap = parse_bounded_index(require_key(j, "cap", "algebra"), 0, 64, "algebra.cap");
    std::vector<Json> pieces = json_list(require_key(j, "pieces", "algebra"), "algebra.pieces");
    if (static_cast<int>(pieces.size()) != alg.cap + 1)
        throw io_error("algebra.pieces: expected " + std::to_string(alg.cap + 1) + " module blocks");
    for (const auto& pj : pieces) alg.pieces.push_back(parse_module(h, pj));
    alg.unit = parse_dense_matrix(h.ring, require_key(j, "unit", "algebra"), alg.pieces[0].rank, 1,
                                  "algebra.unit");
    std::vector<Json> products = json_list(require_key(j, "products", "algebra"), "algebra.products");
    for (const auto& pj : products) {
        if (!pj.is_array() || pj.size() != 3)
            throw io_error("algebra.products: each entry must be [i, j, matrix]");
        int i = parse_bounded_index(pj.at(0), 0, alg.cap + 1, "algebra.products");
        int jdeg = parse_bounded_index(pj.at(1), 0, alg.cap + 1, "algebra.products");
        if (i + jdeg > alg.cap) throw io_error("algebra.products: degrees exceed the cap");
        int rows = alg.pieces[static_cast<size_t>(i + jdeg)].rank;
        int cols = alg.pieces[static_cast<size_t>(i)].rank * alg.pieces[static_cast<size_t>(jdeg)].rank;
        alg.products[{i, jdeg}] =
            parse_dense_matrix(h.ring, pj.at(2), rows, cols, "algebra.products");
    }
    for (int i = 0; i <= alg.cap; ++i)
        for (int jdeg = 0; i + jdeg <= alg.cap; ++jdeg)
            if (!alg.products.count({i, jdeg}))
                throw io_error("algebra.products: missing product for degrees (" + std::to_string(i) +
                               ", " + std::to_string(jdeg) + ")");
    return alg;
}

inline LoadedScheme load_scheme(const Json& j) {
    using namespace iodetail;
    expect_object(j, "scheme file");
    reject_unknown_keys(j, {"ring", "hopf", "module", "algebra"}, "scheme file");
    RingSpec ring = parse_ring(require_key(j, "ring", "scheme file"));
    LoadedScheme out{parse_hopf(ring, require_key(j, "hopf", "scheme file")), std::nullopt, std::nullopt};
    if (j.contains("module")) out.module = parse_module(out.hopf, j.at("module"));
    if (j.contains("algebra")) out.algebra = parse_algebra(out.hopf, j.at("algebra"));
    return out;
}

inline LoadedScheme load_scheme_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw io_error("malformed JSON in " + path + ": " + e.what());
    }
    return load_scheme(j);
}

inline Json ring_to_json(const RingSpec& ring) {
    Json j = Json::object();
    if (ring.is_integers()) {
        j["type"] = "Z";
    } else if (ring.is_rationals()) {
        j["type"] = "Q";
    } else {
        j["type"] = "Zmod";
        j["m"] = static_cast<long long>(ring.modulus());
    }
    return j;
}

inline Json hopf_to_json(const HopfAlgebra& h) {
    using namespace iodetail;
    Json j = Json::object();
    j["rank"] = h.rank;
    Json basis = Json::array();
    for (const std::string& s : h.labels) basis.push_back(s);
    j["basis"] = std::move(basis);
    j["mult"] = tensor_to_json(h.mult);
    Json unit = Json::array();
    for (const Rat& v : h.unit) unit.push_back(scalar_to_string(v));
    j["unit"] = std::move(unit);
    j["comult"] = tensor_to_json(h.comult);
    Json counit = Json::array();
    for (const Rat& v : h.counit) counit.push_back(scalar_to_string(v));
    j["counit"] = std::move(counit);
    j["antipode"] = dense_matrix_to_json(h.antipode);
    return j;
}

inline Json module_to_json(const Comodule& m) {
    Json j = Json::object();
    j["rank"] = m.rank;
    j["coaction"] = iodetail::tensor_to_json(m.coaction);
    return j;
}

inline Json algebra_to_json(const GradedComoduleAlgebra& alg) {
    using namespace iodetail;
    Json j = Json::object();
    j["cap"] = alg.cap;
    Json pieces = Json::array();
    for (const Comodule& p : alg.pieces) pieces.push_back(module_to_json(p));
    j["pieces"] = std::move(pieces);
    j["unit"] = dense_matrix_to_json(alg.unit);
    Json products = Json::array();
    for (const auto& [key, mat] : alg.products)
        products.push_back(Json::array({key.first, key.second, dense_matrix_to_json(mat)}));
    j["products"] = std::move(products);
    return j;
}

/// Serialization always uses the explicit form; constructor sugar and group
/// metadata are load-time conveniences only.
inline Json serialize_scheme(const LoadedScheme& s) {
    Json j = Json::object();
    j["ring"] = ring_to_json(s.hopf.ring);
    j["hopf"] = hopf_to_json(s.hopf);
    if (s.module) j["module"] = module_to_json(*s.module);
    if (s.algebra) j["algebra"] = algebra_to_json(*s.algebra);
    return j;
}

namespace iodetail {

/// Recursive-descent parser for command-line module specs:
///   spec := "trivial" [":" digits] | "regular" | "dual:" spec | "tensor:" spec "," spec
inline Comodule parse_module_spec_at(const HopfAlgebra& h, const std::string& s, size_t& pos) {
    auto starts = [&](const std::string& word) {
        return s.compare(pos, word.size(), word) == 0;
    };
    if (starts("trivial")) {
        pos += 7;
        int d = 1;
        if (pos < s.size() && s[pos] == ':' && pos + 1 < s.size() && s[pos + 1] >= '0' && s[pos + 1] <= '9') {
            ++pos;
            size_t start = pos;
            while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
            d = static_cast<int>(std::stoll(s.substr(start, pos - start)));
        }
        return trivial_comodule(h, d);
    }
    if (starts("regular")) {
        pos += 7;
        return regular_comodule(h);
    }
    if (starts("dual:")) {
        pos += 5;
        return dual_comodule(parse_module_spec_at(h, s, pos));
    }
    if (starts("tensor:")) {
        pos += 7;
        Comodule left = parse_module_spec_at(h, s, pos);
        if (pos >= s.size() || s[pos] != ',')
            throw io_error("module spec: expected \",\" between tensor factors in \"" + s + "\"");
        ++pos;
        Comodule right = parse_module_spec_at(h, s, pos);
        return tensor_comodule(left, right);
    }
    throw io_error("module spec: cannot parse \"" + s.substr(pos) + "\"");
}

}  // namespace iodetail

/// Parse a compact module description like "regular" or "tensor:regular,trivial:2".
inline Comodule parse_module_spec(const HopfAlgebra& h, const std::string& s) {
    size_t pos = 0;
    Comodule m = iodetail::parse_module_spec_at(h, s, pos);
    if (pos != s.size()) throw io_error("module spec: trailing characters in \"" + s + "\"");
    return m;
}

/// Parse a compact algebra description: "trivial" or "sym:<module spec>:<cap>".
inline GradedComoduleAlgebra parse_algebra_spec(const HopfAlgebra& h, const std::string& s) {
    if (s == "trivial") return graded_algebra_from_action(trivial_comodule(h, 0), 0);
    if (s.rfind("sym:", 0) == 0) {
        size_t colon = s.rfind(':');
        if (colon <= 3) throw io_error("algebra spec: expected \"sym:<module>:<cap>\" in \"" + s + "\"");
        std::string capstr = s.substr(colon + 1);
        if (capstr.empty()) throw io_error("algebra spec: missing cap in \"" + s + "\"");
        for (char ch : capstr)
            if (ch < '0' || ch > '9') throw io_error("algebra spec: cap must be a number in \"" + s + "\"");
        int cap = static_cast<int>(std::stoll(capstr));
        if (cap > 64) throw io_error("algebra spec: cap out of range in \"" + s + "\"");
        Comodule v = parse_module_spec(h, s.substr(4, colon - 4));
        return graded_algebra_from_action(v, cap);
    }
    throw io_error("algebra spec: expected \"trivial\" or \"sym:<module>:<cap>\", got \"" + s + "\"");
}

}  // namespace fgs
