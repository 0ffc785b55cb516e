#include "kslope/model_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace kslope {

using nlohmann::json;

void Diagnostics::append(const Diagnostics& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

bool Diagnostics::has_errors() const {
    for (const auto& d : entries_)
        if (d.severity == Severity::error) return true;
    return false;
}

std::string Diagnostics::to_string() const {
    std::ostringstream os;
    for (const auto& d : entries_)
        os << (d.severity == Severity::error ? "error: " : "warning: ") << d.message << "\n";
    return os.str();
}

const Rational& MixedTable::mix(int i, int j, int k) const {
    auto it = mixed.find({i, j, k});
    if (it == mixed.end())
        throw std::out_of_range("mixed table has no entry " + std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k));
    return it->second;
}

const Rational& MixedTable::kmix(int i, int j, int k) const {
    auto it = kmixed.find({i, j, k});
    if (it == kmixed.end())
        throw std::out_of_range("mixed canonical table has no entry " + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(k));
    return it->second;
}

IntersectionTable MixedTable::base_table() const { return at(Rational(0)); }

IntersectionTable MixedTable::at(const Rational& s) const {
    IntersectionTable t;
    t.label = label;
    t.n = n;
    t.epsilon = epsilon;
    // ((L + sH)^(n-k) E^k) = sum_j C(n-k, j) s^j (L^(n-k-j) H^j E^k)
    for (int k = 0; k <= n; ++k) {
        Rational v;
        for (int j = 0; j <= n - k; ++j) v += binomial(n - k, j) * s.pow(j) * mix(n - k - j, j, k);
        t.ae.push_back(v);
    }
    for (int k = 0; k <= n - 1; ++k) {
        Rational v;
        for (int j = 0; j <= n - 1 - k; ++j) v += binomial(n - 1 - k, j) * s.pow(j) * kmix(n - 1 - k - j, j, k);
        t.kae.push_back(v);
    }
    return t;
}

std::vector<TripleIndex> simplex_indices(int total) {
    std::vector<TripleIndex> out;
    for (int i = total; i >= 0; --i)
        for (int j = total - i; j >= 0; --j) out.push_back({i, j, total - i - j});
    return out;
}

UniPoly self_intersection_poly(const IntersectionTable& table) {
    std::vector<Rational> c;
    for (int k = 0; k <= table.n; ++k) {
        const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
        c.push_back(binomial(table.n, k) * sign * table.ae.at(static_cast<std::size_t>(k)));
    }
    return UniPoly(std::move(c));
}

UniPoly canonical_pairing_poly(const IntersectionTable& table) {
    std::vector<Rational> c;
    for (int k = 0; k <= table.n - 1; ++k) {
        const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
        c.push_back(binomial(table.n - 1, k) * sign * table.kae.at(static_cast<std::size_t>(k)));
    }
    return UniPoly(std::move(c));
}

Diagnostics validate(const IntersectionTable& table) {
    Diagnostics d;
    if (table.n < 1) {
        d.error("dimension must be positive");
        return d;
    }
    if (table.ae.size() != static_cast<std::size_t>(table.n) + 1)
        d.error("AE must have n + 1 = " + std::to_string(table.n + 1) + " entries");
    if (table.kae.size() != static_cast<std::size_t>(table.n))
        d.error("KAE must have n = " + std::to_string(table.n) + " entries");
    if (d.has_errors()) return d;
    if (table.ae[0].sign() <= 0)
        d.error("not big: top self-intersection " + table.ae[0].to_string() + " is not positive");
    if (table.epsilon.sign() <= 0) d.error("nef threshold epsilon must be positive");
    if (d.has_errors()) return d;
    const Rational at_eps = self_intersection_poly(table)(table.epsilon) / factorial(table.n);
    if (at_eps.sign() < 0)
        d.warn("alpha0 negative before threshold: alpha0(" + table.epsilon.to_string() + ") = " +
               at_eps.to_string());
    if (table.n == 1) d.warn("n = 1: degenerate conventions apply (alpha1 is constant)");
    return d;
}

Diagnostics validate(const MixedTable& table) {
    Diagnostics d;
    if (table.n < 1) {
        d.error("dimension must be positive");
        return d;
    }
    for (const auto& idx : simplex_indices(table.n))
        if (!table.mixed.count(idx))
            d.error("MIX is missing " + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," +
                    std::to_string(idx[2]));
    for (const auto& idx : simplex_indices(table.n - 1))
        if (!table.kmixed.count(idx))
            d.error("KMIX is missing " + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," +
                    std::to_string(idx[2]));
    if (table.mixed.size() != simplex_indices(table.n).size()) d.error("MIX has entries outside i+j+k = n");
    if (table.kmixed.size() != simplex_indices(table.n - 1).size())
        d.error("KMIX has entries outside i+j+k = n-1");
    if (d.has_errors()) return d;
    d.append(validate(table.base_table()));
    return d;
}

IntersectionTable scale_polarization(const IntersectionTable& table, const Rational& d) {
    if (d.sign() <= 0) throw std::invalid_argument("scaling factor must be positive");
    IntersectionTable t = table;
    for (int k = 0; k <= t.n; ++k) t.ae[static_cast<std::size_t>(k)] *= d.pow(t.n - k);
    for (int k = 0; k <= t.n - 1; ++k) t.kae[static_cast<std::size_t>(k)] *= d.pow(t.n - 1 - k);
    t.epsilon *= d;
    return t;
}

// ---------------------------------------------------------------------------
// Documents

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

void reject_unknown(const json& doc, const std::set<std::string>& allowed) {
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (!allowed.count(it.key())) fail("unknown field '" + it.key() + "'");
}

const json& require(const json& doc, const std::string& key) {
    auto it = doc.find(key);
    if (it == doc.end()) fail("missing required field '" + key + "'");
    return *it;
}

Rational read_rational(const json& v, const std::string& where) {
    try {
        if (v.is_number_integer()) return Rational(v.get<long long>());
        if (v.is_string()) return Rational::parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(where + ": " + e.what());
    }
    fail(where + ": expected an integer or a \"p/q\" string");
}

long long read_integer(const json& v, const std::string& where) {
    if (v.is_number_integer()) return v.get<long long>();
    if (v.is_string()) {
        Rational r = read_rational(v, where);
        if (r.is_integer() && r.numerator().fits_slong_p()) return r.numerator().get_si();
    }
    fail(where + ": expected an integer");
}

std::vector<Rational> read_rational_array(const json& v, const std::string& where) {
    if (!v.is_array()) fail(where + ": expected an array");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_rational(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

IntVec read_int_array(const json& v, const std::string& where) {
    if (!v.is_array()) fail(where + ": expected an array");
    IntVec out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_integer(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

std::string read_label(const json& doc) {
    const json& l = require(doc, "label");
    if (!l.is_string()) fail("label: expected a string");
    return l.get<std::string>();
}

int read_dimension(const json& doc) {
    const long long n = read_integer(require(doc, "n"), "n");
    if (n < 1 || n > 64) fail("n: dimension must be a positive integer");
    return static_cast<int>(n);
}

Rational read_epsilon(const json& doc) {
    Rational eps = read_rational(require(doc, "epsilon"), "epsilon");
    if (eps.sign() <= 0) fail("epsilon: nef threshold must be positive, got " + eps.to_string());
    return eps;
}

TripleIndex read_triple_key(const std::string& key, const std::string& where) {
    TripleIndex idx{};
    std::istringstream is(key);
    std::string part;
    int count = 0;
    while (std::getline(is, part, ',')) {
        if (count >= 3 || part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            fail(where + ": malformed index key '" + key + "'");
        idx[static_cast<std::size_t>(count++)] = std::stoi(part);
    }
    if (count != 3) fail(where + ": malformed index key '" + key + "'");
    return idx;
}

std::map<TripleIndex, Rational> read_triple_map(const json& v, int total, const std::string& where) {
    if (!v.is_object()) fail(where + ": expected an object keyed by \"i,j,k\"");
    std::map<TripleIndex, Rational> out;
    for (auto it = v.begin(); it != v.end(); ++it) {
        const TripleIndex idx = read_triple_key(it.key(), where);
        if (idx[0] + idx[1] + idx[2] != total)
            fail(where + ": index '" + it.key() + "' does not sum to " + std::to_string(total));
        out[idx] = read_rational(it.value(), where + "[" + it.key() + "]");
    }
    for (const auto& idx : simplex_indices(total))
        if (!out.count(idx))
            fail(where + ": missing index " + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," +
                 std::to_string(idx[2]));
    return out;
}

IntersectionTable parse_table(const json& doc) {
    reject_unknown(doc, {"kind", "label", "n", "AE", "KAE", "epsilon"});
    IntersectionTable t;
    t.label = read_label(doc);
    t.n = read_dimension(doc);
    t.ae = read_rational_array(require(doc, "AE"), "AE");
    t.kae = read_rational_array(require(doc, "KAE"), "KAE");
    t.epsilon = read_epsilon(doc);
    if (t.ae.size() != static_cast<std::size_t>(t.n) + 1) fail("AE: expected n + 1 entries");
    if (t.kae.size() != static_cast<std::size_t>(t.n)) fail("KAE: expected n entries");
    return t;
}

MixedTable parse_mixed(const json& doc) {
    reject_unknown(doc, {"kind", "label", "n", "MIX", "KMIX", "epsilon"});
    MixedTable t;
    t.label = read_label(doc);
    t.n = read_dimension(doc);
    t.mixed = read_triple_map(require(doc, "MIX"), t.n, "MIX");
    t.kmixed = read_triple_map(require(doc, "KMIX"), t.n - 1, "KMIX");
    t.epsilon = read_epsilon(doc);
    return t;
}

toric::ToricModel parse_toric(const json& doc) {
    reject_unknown(doc, {"kind", "label", "rays", "max_cones", "L", "H", "sigma"});
    toric::ToricModel m;
    m.label = read_label(doc);
    const json& rays = require(doc, "rays");
    if (!rays.is_array() || rays.empty()) fail("rays: expected a non-empty array");
    for (std::size_t i = 0; i < rays.size(); ++i)
        m.fan.rays.push_back(read_int_array(rays[i], "rays[" + std::to_string(i) + "]"));
    m.fan.dim = static_cast<int>(m.fan.rays.front().size());
    for (const auto& r : m.fan.rays)
        if (static_cast<int>(r.size()) != m.fan.dim) fail("rays: inconsistent ray dimensions");
    if (m.fan.dim < 1) fail("rays: zero-dimensional rays");
    auto read_indices = [&](const json& v, const std::string& where) {
        std::vector<int> out;
        for (long long x : read_int_array(v, where)) {
            if (x < 0 || x >= static_cast<long long>(m.fan.rays.size())) fail(where + ": ray index out of range");
            out.push_back(static_cast<int>(x));
        }
        return out;
    };
    const json& cones = require(doc, "max_cones");
    if (!cones.is_array()) fail("max_cones: expected an array");
    for (std::size_t i = 0; i < cones.size(); ++i)
        m.fan.max_cones.push_back(read_indices(cones[i], "max_cones[" + std::to_string(i) + "]"));
    auto read_divisor = [&](const std::string& key) {
        toric::ToricDivisor d;
        for (long long x : read_int_array(require(doc, key), key)) d.coeffs.emplace_back(x);
        if (d.coeffs.size() != m.fan.rays.size()) fail(key + ": expected one coefficient per ray");
        return d;
    };
    m.L = read_divisor("L");
    if (doc.contains("H")) m.H = read_divisor("H");
    m.sigma = read_indices(require(doc, "sigma"), "sigma");
    if (m.sigma.empty()) fail("sigma: must name at least one ray");
    return m;
}

json rational_json(const Rational& r) { return r.to_string(); }

json rational_array(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(rational_json(r));
    return a;
}

std::string triple_key(const TripleIndex& idx) {
    return std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," + std::to_string(idx[2]);
}

json to_json(const IntersectionTable& t) {
    json doc = json::object();
    doc["kind"] = "table";
    doc["label"] = t.label;
    doc["n"] = t.n;
    doc["AE"] = rational_array(t.ae);
    doc["KAE"] = rational_array(t.kae);
    doc["epsilon"] = rational_json(t.epsilon);
    return doc;
}

json to_json(const MixedTable& t) {
    json doc = json::object();
    doc["kind"] = "mixed-table";
    doc["label"] = t.label;
    doc["n"] = t.n;
    json mix = json::object();
    for (const auto& [idx, v] : t.mixed) mix[triple_key(idx)] = rational_json(v);
    json kmix = json::object();
    for (const auto& [idx, v] : t.kmixed) kmix[triple_key(idx)] = rational_json(v);
    doc["MIX"] = mix;
    doc["KMIX"] = kmix;
    doc["epsilon"] = rational_json(t.epsilon);
    return doc;
}

json integer_divisor(const toric::ToricDivisor& d) {
    json a = json::array();
    for (const auto& c : d.coeffs) {
        if (!c.is_integer()) throw std::invalid_argument("toric documents hold integral divisors only");
        a.push_back(c.numerator().get_si());
    }
    return a;
}

json to_json(const toric::ToricModel& m) {
    json doc = json::object();
    doc["kind"] = "toric";
    doc["label"] = m.label;
    doc["rays"] = m.fan.rays;
    doc["max_cones"] = m.fan.max_cones;
    doc["L"] = integer_divisor(m.L);
    if (m.H) doc["H"] = integer_divisor(*m.H);
    doc["sigma"] = m.sigma;
    return doc;
}

} // namespace

ModelDocument parse_model(std::string_view bytes) {
    json doc;
    try {
        doc = json::parse(bytes.begin(), bytes.end());
    } catch (const json::parse_error& e) {
        fail(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object()) fail("malformed document: top level must be an object");
    const json& kind = require(doc, "kind");
    if (!kind.is_string()) fail("kind: expected a string");
    const std::string k = kind.get<std::string>();
    if (k == "table") return parse_table(doc);
    if (k == "mixed-table") return parse_mixed(doc);
    if (k == "toric") return parse_toric(doc);
    fail("kind: unknown model kind '" + k + "'");
}

std::string serialize_model(const ModelDocument& model) {
    const json doc = std::visit([](const auto& m) { return to_json(m); }, model);
    return doc.dump(2) + "\n";
}

ModelDocument load_model_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read model file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str());
}

std::string model_label(const ModelDocument& model) {
    return std::visit([](const auto& m) { return m.label; }, model);
}

} // namespace kslope
