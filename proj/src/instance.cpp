#include "altsum/instance.hpp"

#include <limits>
#include <set>

#include <nlohmann/json.hpp>

#include "altsum/determinant.hpp"
#include "altsum/errors.hpp"

namespace altsum {

namespace {

using nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

[[noreturn]] void schema_error(const std::string& path, const std::string& message) {
    throw InputError(path + ": " + message);
}

const json& field(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) schema_error(path, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) schema_error(path, std::string("missing field \"") + key + "\"");
    return *it;
}

std::size_t count_value(const json& v, const std::string& path) {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) schema_error(path, "expected a positive integer");
    return static_cast<std::size_t>(v.get<std::uint64_t>());
}

Rational rational_value(const json& v, const std::string& path) {
    if (!v.is_string()) schema_error(path, "expected a rational string such as \"-3/7\"");
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const InputError& e) {
        schema_error(path, e.what());
    }
}

Matrix matrix_value(const json& v, std::size_t n, const std::string& path) {
    if (!v.is_array() || v.size() != n) schema_error(path, "expected " + std::to_string(n) + " rows");
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::string row_path = path + "[" + std::to_string(r) + "]";
        const json& row = v[r];
        if (!row.is_array() || row.size() != n) schema_error(row_path, "expected " + std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c)
            m(r, c) = rational_value(row[c], row_path + "[" + std::to_string(c) + "]");
    }
    return m;
}

std::vector<Matrix> matrices_value(const json& doc, const std::vector<std::size_t>& sizes) {
    const json& ms = field(doc, "matrices", "$");
    if (!ms.is_array() || ms.size() != sizes.size())
        schema_error("$.matrices", "expected " + std::to_string(sizes.size()) + " matrices");
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        out.push_back(matrix_value(ms[i], sizes[i], "$.matrices[" + std::to_string(i) + "]"));
    return out;
}

Polynomial spinor_value(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 2) schema_error(path, "expected [constant, t-coefficient]");
    return Polynomial::linear(rational_value(v[0], path + "[0]"), rational_value(v[1], path + "[1]"));
}

json rational_json(const Rational& x) { return x.to_string(); }

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json matrices_json(const MatrixTuple& t) {
    json out = json::array();
    for (const auto& m : t.matrices()) out.push_back(matrix_json(m));
    return out;
}

json spinor_json(const Polynomial& p) { return json::array({rational_json(p[0]), rational_json(p[1])}); }

Instance parse_matrix_tuple(const json& doc) {
    const json& shape_v = field(doc, "shape", "$");
    if (!shape_v.is_array()) schema_error("$.shape", "expected an array of sizes");
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < shape_v.size(); ++i)
        sizes.push_back(count_value(shape_v[i], "$.shape[" + std::to_string(i) + "]"));
    MatrixTupleInstance inst{MatrixTuple(matrices_value(doc, sizes)), std::nullopt};

    if (const auto it = doc.find("form"); it != doc.end()) {
        const json& form = *it;
        const json& type = field(form, "type", "$.form");
        if (type != "dense") schema_error("$.form.type", "only \"dense\" forms are supported");
        const json& coeffs = field(form, "coeffs", "$.form");
        const std::uint64_t expected = DenseTensorForm::coefficient_count(inst.matrices.shape());
        if (expected > DenseTensorForm::max_coefficients) schema_error("$.form", "dense tensor too large for this shape");
        if (!coeffs.is_array() || coeffs.size() != expected)
            schema_error("$.form.coeffs", "expected " + std::to_string(expected) + " coefficients");
        std::vector<Rational> values;
        values.reserve(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            values.push_back(rational_value(coeffs[i], "$.form.coeffs[" + std::to_string(i) + "]"));
        inst.form.emplace(inst.matrices.shape(), std::move(values));
    }
    return inst;
}

Instance parse_colorful(const json& doc) {
    const std::size_t n = count_value(field(doc, "n", "$"), "$.n");
    return ColorfulInstance(MatrixTuple(matrices_value(doc, std::vector<std::size_t>(n, n))));
}

Instance parse_spinor(const json& doc) {
    const std::size_t n = count_value(field(doc, "n", "$"), "$.n");
    if (n > 11) schema_error("$.n", "spinor instances support at most 11 vertices");
    const json& edges_v = field(doc, "edges", "$");
    const std::size_t expected = edge_count(n);
    if (!edges_v.is_array() || edges_v.size() != expected)
        schema_error("$.edges", "expected C(n,2) = " + std::to_string(expected) + " edges, got " +
                                    (edges_v.is_array() ? std::to_string(edges_v.size()) : std::string("a non-array")));

    const SpinorInstance layout = SpinorInstance::identity(n);
    std::vector<std::optional<EdgeBasis>> slots(expected);
    for (std::size_t k = 0; k < edges_v.size(); ++k) {
        const std::string path = "$.edges[" + std::to_string(k) + "]";
        const json& e = edges_v[k];
        const std::size_t i = count_value(field(e, "i", path), path + ".i");
        const std::size_t j = count_value(field(e, "j", path), path + ".j");
        if (!(i < j && j <= n)) schema_error(path, "need 1 <= i < j <= n");
        const std::size_t index = layout.edge_index(i - 1, j - 1);
        if (slots[index]) schema_error(path, "duplicate edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
        slots[index] = EdgeBasis{spinor_value(field(e, "p1", path), path + ".p1"),
                                 spinor_value(field(e, "p2", path), path + ".p2")};
    }
    std::vector<EdgeBasis> edges;
    for (auto& s : slots) edges.push_back(std::move(*s));
    return SpinorInstance(n, std::move(edges));
}

} // namespace

InstanceKind kind_of(const Instance& instance) {
    return static_cast<InstanceKind>(instance.index());
}

std::string kind_name(InstanceKind kind) {
    switch (kind) {
    case InstanceKind::matrix_tuple: return "matrix-tuple";
    case InstanceKind::colorful: return "colorful";
    case InstanceKind::spinor: return "spinor";
    }
    return "unknown";
}

InstanceKind parse_kind(std::string_view name) {
    if (name == "matrix-tuple") return InstanceKind::matrix_tuple;
    if (name == "colorful") return InstanceKind::colorful;
    if (name == "spinor") return InstanceKind::spinor;
    throw InputError("unknown instance kind '" + std::string(name) + "'");
}

Instance parse_instance(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON at " + line_column(json_text, e.byte) + ": " + e.what());
    }
    const json& kind = field(doc, "kind", "$");
    if (!kind.is_string()) schema_error("$.kind", "expected a string");
    try {
        switch (parse_kind(kind.get<std::string>())) {
        case InstanceKind::matrix_tuple: return parse_matrix_tuple(doc);
        case InstanceKind::colorful: return parse_colorful(doc);
        case InstanceKind::spinor: return parse_spinor(doc);
        }
    } catch (const DimensionError& e) {
        throw InputError(e.what());
    }
    throw InputError("unreachable instance kind");
}

std::string instance_to_json(const Instance& instance) {
    json doc;
    doc["kind"] = kind_name(kind_of(instance));
    if (const auto* t = std::get_if<MatrixTupleInstance>(&instance)) {
        doc["shape"] = t->matrices.shape().sizes();
        doc["matrices"] = matrices_json(t->matrices);
        if (t->form) {
            json coeffs = json::array();
            for (const auto& c : t->form->coeffs()) coeffs.push_back(rational_json(c));
            doc["form"] = {{"type", "dense"}, {"coeffs", std::move(coeffs)}};
        }
    } else if (const auto* c = std::get_if<ColorfulInstance>(&instance)) {
        doc["n"] = c->n();
        doc["matrices"] = matrices_json(c->matrices());
    } else {
        const auto& s = std::get<SpinorInstance>(instance);
        doc["n"] = s.n();
        json edges = json::array();
        for (std::size_t e = 0; e < s.edge_count(); ++e) {
            const auto [i, j] = s.edge_vertices(e);
            edges.push_back({{"i", i + 1}, {"j", j + 1}, {"p1", spinor_json(s.edge(e).p1)}, {"p2", spinor_json(s.edge(e).p2)}});
        }
        doc["edges"] = std::move(edges);
    }
    return doc.dump(2);
}

std::int64_t InstanceRng::uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

Matrix random_matrix(std::size_t rows, std::size_t cols, InstanceRng& rng, std::int64_t bound) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(static_cast<long>(rng.uniform(-bound, bound)));
    return m;
}

namespace {

Matrix random_nonsingular(std::size_t n, InstanceRng& rng) {
    for (std::uint64_t attempt = 0; attempt < random_retry_cap; ++attempt) {
        Matrix m = random_matrix(n, n, rng);
        if (!det(m).is_zero()) return m;
    }
    throw BudgetExceeded("no nonsingular matrix within the retry cap", random_retry_cap + 1, random_retry_cap);
}

} // namespace

DenseTensorForm random_dense_form(const Shape& shape, InstanceRng& rng, std::int64_t bound) {
    DenseTensorForm zero = DenseTensorForm::zero(shape);
    std::vector<Rational> coeffs(zero.coeffs().size());
    for (auto& c : coeffs) c = Rational(static_cast<long>(rng.uniform(-bound, bound)));
    return DenseTensorForm(shape, std::move(coeffs));
}

ColorfulInstance random_colorful(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw InputError("n must be at least 1");
    InstanceRng rng(seed);
    std::vector<Matrix> ms;
    for (std::size_t i = 0; i < n; ++i) ms.push_back(random_nonsingular(n, rng));
    return ColorfulInstance(MatrixTuple(std::move(ms)));
}

SpinorInstance random_spinor(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw InputError("n must be at least 1");
    if (n > 11) throw InputError("spinor instances support at most 11 vertices");
    InstanceRng rng(seed);
    std::vector<EdgeBasis> edges;
    for (std::size_t e = 0; e < edge_count(n); ++e) {
        bool placed = false;
        for (std::uint64_t attempt = 0; attempt < random_retry_cap && !placed; ++attempt) {
            const auto draw = [&] { return Rational(static_cast<long>(rng.uniform(-random_entry_bound, random_entry_bound))); };
            Rational a = draw(), b = draw(), c = draw(), d = draw();
            EdgeBasis basis{Polynomial::linear(a, b), Polynomial::linear(c, d)};
            if (!basis.det().is_zero()) {
                edges.push_back(std::move(basis));
                placed = true;
            }
        }
        if (!placed) throw BudgetExceeded("no nonsingular edge basis within the retry cap", random_retry_cap + 1, random_retry_cap);
    }
    return SpinorInstance(n, std::move(edges));
}

MatrixTupleInstance random_matrix_tuple(const Shape& shape, std::uint64_t seed) {
    InstanceRng rng(seed);
    std::vector<Matrix> ms;
    for (auto n : shape.sizes()) ms.push_back(random_nonsingular(n, rng));
    MatrixTupleInstance inst{MatrixTuple(std::move(ms)), std::nullopt};
    inst.form.emplace(random_dense_form(shape, rng));
    return inst;
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    static constexpr char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (std::size_t i = 16; i-- > 0; h >>= 4) out[i] = digits[h & 0xf];
    return out;
}

} // namespace altsum
