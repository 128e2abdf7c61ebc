#include "io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

namespace twd::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw FormatError(msg); }

const json& field(const json& obj, const char* key)
{
    auto it = obj.find(key);
    if (it == obj.end())
        fail(std::string("missing field '") + key + "'");
    return *it;
}

void only_keys(const json& obj, std::initializer_list<const char*> allowed)
{
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [k, v] : obj.items())
        if (!ok.count(k))
            fail("unknown field '" + k + "'");
}

int int_from(const json& j, const char* what)
{
    if (!j.is_number_integer())
        fail(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::string string_from(const json& j, const char* what)
{
    if (!j.is_string())
        fail(std::string(what) + " must be a string");
    return j.get<std::string>();
}

std::vector<StructureConstant> triples_from(const json& j, const char* what)
{
    if (!j.is_array())
        fail(std::string(what) + " must be an array");
    std::vector<StructureConstant> out;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 4)
            fail(std::string(what) + " entries must be [i, j, k, \"c\"]");
        out.push_back({int_from(t[0], what), int_from(t[1], what), int_from(t[2], what), scalar_from(t[3])});
    }
    return out;
}

Vec<Q> vector_from(const json& j, int dim, const char* what)
{
    if (!j.is_array())
        fail(std::string(what) + " must be an array");
    Vec<Q> v = zero_vec<Q>(dim);
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2)
            fail(std::string(what) + " entries must be [i, \"c\"]");
        const int i = int_from(t[0], what);
        if (i < 0 || i >= dim)
            fail(std::string(what) + " index " + std::to_string(i) + " out of range");
        v(i) += scalar_from(t[1]);
    }
    return v;
}

json triples_json(const std::vector<StructureConstant>& sc)
{
    json out = json::array();
    for (const auto& s : sc)
        out.push_back({s.i, s.j, s.k, scalar_json(s.value)});
    return out;
}

std::vector<std::string> names_from(const json& j, int dim)
{
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        fail("basis_names must list dim names");
    std::vector<std::string> out;
    for (const auto& n : j)
        out.push_back(string_from(n, "basis name"));
    return out;
}

// Splits "x*y^2*z" into basis indices.
Word word_from_names(const std::string& s, const std::vector<std::string>& names)
{
    Word w;
    if (s == "1")
        return w;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t star = s.find('*', pos);
        std::string part = s.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        int power = 1;
        const std::size_t caret = part.find('^');
        if (caret != std::string::npos) {
            try {
                power = std::stoi(part.substr(caret + 1));
            } catch (const std::exception&) {
                fail("bad exponent in '" + part + "'");
            }
            if (power < 1)
                fail("bad exponent in '" + part + "'");
            part = part.substr(0, caret);
        }
        auto it = std::find(names.begin(), names.end(), part);
        if (it == names.end())
            fail("unknown basis name '" + part + "'");
        for (int k = 0; k < power; ++k)
            w.push_back(static_cast<int>(it - names.begin()));
        if (star == std::string::npos)
            break;
        pos = star + 1;
    }
    return w;
}

Word slot_word(const json& slot, const std::vector<std::string>& names)
{
    if (slot.is_string())
        return word_from_names(slot.get<std::string>(), names);
    if (!slot.is_array())
        fail("element slot must be an index array or a name string");
    Word w;
    for (const auto& i : slot) {
        const int a = int_from(i, "slot index");
        if (a < 0 || a >= static_cast<int>(names.size()))
            fail("slot index " + std::to_string(a) + " out of range");
        w.push_back(a);
    }
    return w;
}

// Single basis element per slot; a string must be a full basis name.
int slot_index(const json& slot, const std::vector<std::string>& names)
{
    if (slot.is_string()) {
        auto it = std::find(names.begin(), names.end(), slot.get<std::string>());
        if (it == names.end())
            fail("unknown basis name '" + slot.get<std::string>() + "'");
        return static_cast<int>(it - names.begin());
    }
    const Word w = slot_word(slot, names);
    if (w.size() != 1)
        fail("each slot must hold exactly one basis element");
    return w[0];
}

Tensor tensor_from(int dim, const std::vector<std::string>& names, const RawElement& e)
{
    Tensor t(dim, e.degree);
    for (const auto& [slots, c] : e.terms) {
        MultiIndex idx;
        for (const auto& s : slots)
            idx.push_back(slot_index(s, names));
        t.add(idx, c);
    }
    return t;
}

} // namespace

json scalar_json(const Q& q) { return q.str(); }

Q scalar_from(const json& j)
{
    if (j.is_number_integer())
        return Q(j.get<long long>());
    if (!j.is_string())
        fail("scalars must be strings \"p/q\"");
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
}

Algebra parse_algebra(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        fail("algebra file must be a JSON object");
    if (j.contains("schema") && string_from(j["schema"], "schema") != kAlgebraSchema)
        fail("unsupported schema '" + j["schema"].get<std::string>() + "'");
    const std::string kind = string_from(field(j, "kind"), "kind");
    const int dim = int_from(field(j, "dim"), "dim");
    if (dim < 1)
        fail("dim must be positive");
    const auto names = names_from(field(j, "basis_names"), dim);
    const std::string name = j.contains("name") ? string_from(j["name"], "name") : std::string("unnamed");
    const std::string description = j.contains("description") ? string_from(j["description"], "description") : "";

    if (kind == "lie_algebra") {
        only_keys(j, {"schema", "kind", "name", "description", "dim", "basis_names", "bracket"});
        LieAlgebra g(name, names, triples_from(field(j, "bracket"), "bracket"));
        g.set_description(description);
        return g;
    }
    if (kind != "bialgebra")
        fail("kind must be 'bialgebra' or 'lie_algebra'");
    only_keys(j, {"schema", "kind", "name", "description", "dim", "basis_names", "mult", "unit", "comult", "counit",
                     "antipode"});
    std::optional<DenseMat<Q>> antipode;
    if (j.contains("antipode")) {
        const auto entries = j["antipode"];
        if (!entries.is_array())
            fail("antipode must be an array");
        DenseMat<Q> s = DenseMat<Q>::Constant(dim, dim, Q(0));
        for (const auto& t : entries) {
            if (!t.is_array() || t.size() != 3)
                fail("antipode entries must be [row, col, \"c\"]");
            const int r = int_from(t[0], "antipode");
            const int c = int_from(t[1], "antipode");
            if (r < 0 || r >= dim || c < 0 || c >= dim)
                fail("antipode index out of range");
            s(r, c) += scalar_from(t[2]);
        }
        antipode = std::move(s);
    }
    Bialgebra b(name, names, triples_from(field(j, "mult"), "mult"), vector_from(field(j, "unit"), dim, "unit"),
        triples_from(field(j, "comult"), "comult"), vector_from(field(j, "counit"), dim, "counit"), antipode);
    b.set_description(description);
    return b;
}

json algebra_json(const Algebra& a)
{
    json j;
    j["schema"] = kAlgebraSchema;
    if (const auto* g = std::get_if<LieAlgebra>(&a)) {
        j["kind"] = "lie_algebra";
        j["name"] = g->name();
        j["description"] = g->description();
        j["dim"] = g->dim();
        j["basis_names"] = g->basis_names();
        j["bracket"] = triples_json(g->constants());
        return j;
    }
    const auto& b = std::get<Bialgebra>(a);
    j["kind"] = "bialgebra";
    j["name"] = b.name();
    j["description"] = b.description();
    j["dim"] = b.dim();
    j["basis_names"] = b.basis_names();
    j["mult"] = triples_json(b.mult_constants());
    j["comult"] = triples_json(b.comult_constants());
    j["unit"] = sparse_json(b.unit());
    j["counit"] = sparse_json(b.counit());
    if (b.antipode()) {
        json s = json::array();
        const auto& m = *b.antipode();
        for (Index r = 0; r < m.rows(); ++r)
            for (Index c = 0; c < m.cols(); ++c)
                if (m(r, c) != 0)
                    s.push_back({r, c, scalar_json(m(r, c))});
        j["antipode"] = s;
    }
    return j;
}

std::string emit_algebra(const Algebra& a) { return algebra_json(a).dump(2) + "\n"; }

RawElement parse_element(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        fail("element file must be a JSON object");
    only_keys(j, {"schema", "kind", "degree", "terms"});
    if (j.contains("kind") && string_from(j["kind"], "kind") != "element")
        fail("kind must be 'element'");
    if (j.contains("schema") && string_from(j["schema"], "schema") != kElementSchema)
        fail("unsupported schema '" + j["schema"].get<std::string>() + "'");
    RawElement e;
    e.degree = int_from(field(j, "degree"), "degree");
    if (e.degree < 0)
        fail("degree must be non-negative");
    const json& terms = field(j, "terms");
    if (!terms.is_array())
        fail("terms must be an array");
    for (const auto& t : terms) {
        if (!t.is_object())
            fail("each term must be an object {\"c\", \"slots\"}");
        only_keys(t, {"c", "slots"});
        const json& slots = field(t, "slots");
        if (!slots.is_array() || static_cast<int>(slots.size()) != e.degree)
            fail("each term needs exactly degree slots");
        e.terms.emplace_back(std::vector<json>(slots.begin(), slots.end()), scalar_from(field(t, "c")));
    }
    return e;
}

json element_json(const UTensor& t)
{
    json j;
    j["schema"] = kElementSchema;
    j["kind"] = "element";
    j["degree"] = t.degree;
    json terms = json::array();
    for (const auto& [key, c] : t.terms)
        terms.push_back({{"c", scalar_json(c)}, {"slots", key}});
    j["terms"] = terms;
    return j;
}

std::string emit_element(const UTensor& t) { return element_json(t).dump(2) + "\n"; }

json element_json(const Tensor& t)
{
    UTensor u(t.degree());
    for (const auto& [i, c] : t.terms()) {
        std::vector<Word> key;
        for (int a : t.multi_index(i))
            key.push_back(Word{a});
        u.add(key, c);
    }
    return element_json(u);
}

Tensor to_tensor(const Bialgebra& b, const RawElement& e) { return tensor_from(b.dim(), b.basis_names(), e); }

Tensor to_lie_tensor(const LieAlgebra& g, const RawElement& e) { return tensor_from(g.dim(), g.basis_names(), e); }

UTensor to_words(const std::vector<std::string>& names, const RawElement& e)
{
    UTensor t(e.degree);
    for (const auto& [slots, c] : e.terms) {
        std::vector<Word> key;
        for (const auto& s : slots)
            key.push_back(slot_word(s, names));
        t.add(key, c);
    }
    return t;
}

std::string read_input(const std::string& path)
{
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    std::ifstream f(path, std::ios::binary);
    if (!f)
        fail("cannot read '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

std::string sha256_hex(const std::string& bytes)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

json sparse_json(const Vec<Q>& v)
{
    json out = json::array();
    for (Index i = 0; i < v.size(); ++i)
        if (v(i) != 0)
            out.push_back({i, scalar_json(v(i))});
    return out;
}

json table_json(const BilinearTable& t, Index dim)
{
    json out = json::array();
    for (Index i = 0; i < dim; ++i)
        for (Index j = 0; j < dim; ++j) {
            const Vec<Q>& v = t[static_cast<std::size_t>(i * dim + j)];
            for (Index k = 0; k < v.size(); ++k)
                if (v(k) != 0)
                    out.push_back({i, j, k, scalar_json(v(k))});
        }
    return out;
}

json tensor_json(const Tensor& t, const std::vector<std::string>& names)
{
    json coords = json::array();
    for (const auto& [i, c] : t.terms())
        coords.push_back({i, scalar_json(c)});
    return {{"degree", t.degree()}, {"coords", coords}, {"display", format_tensor(t, names)}};
}

} // namespace twd::io
