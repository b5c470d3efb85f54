#include <e1dirac/manifest.hpp>

#include <bit>
#include <sstream>

namespace e1dirac {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

const std::pair<StructureKind, const char*> kKindNames[] = {
    {StructureKind::two_form, "two-form"},
    {StructureKind::bivector, "bivector"},
    {StructureKind::distribution, "distribution"},
    {StructureKind::jacobi, "jacobi"},
    {StructureKind::lcps, "lcps"},
    {StructureKind::homogeneous, "homogeneous"},
    {StructureKind::exact_pair, "exact-pair"},
    {StructureKind::nambu, "nambu"},
    {StructureKind::subbundle, "subbundle"},
};

struct TermLine {
    std::vector<int> indices;
    Scalar coeff;
};

// "[0,2] x + 1" -> indices {0,2} and the parsed coefficient
TermLine parse_term(const std::string& value, const std::vector<std::string>& coords,
                    int line_no) {
    std::size_t open = value.find('[');
    std::size_t close = value.find(']');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw parse_error(line_no, "expected '[i,j,...] expr'");
    TermLine t{.indices = {}, .coeff = Scalar(static_cast<int>(coords.size()))};
    std::string inside = value.substr(open + 1, close - open - 1);
    std::stringstream ss(inside);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        piece = trim(piece);
        if (piece.empty()) throw parse_error(line_no, "empty index");
        std::size_t used = 0;
        int idx = std::stoi(piece, &used);
        if (used != piece.size() || idx < 0)
            throw parse_error(line_no, "bad index '" + piece + "'");
        t.indices.push_back(idx);
    }
    for (std::size_t i = 0; i + 1 < t.indices.size(); ++i)
        if (t.indices[i] >= t.indices[i + 1])
            throw parse_error(line_no, "indices must be strictly increasing");
    for (int idx : t.indices)
        if (idx >= static_cast<int>(coords.size()))
            throw parse_error(line_no, "index " + std::to_string(idx) + " out of range");
    try {
        t.coeff = parse_expression(value.substr(close + 1), coords);
    } catch (const parse_error& pe) {
        throw parse_error(line_no, pe.what());
    }
    return t;
}

IndexMask mask_of(const std::vector<int>& indices) {
    IndexMask m = 0;
    for (int i : indices) m |= IndexMask(1) << i;
    return m;
}

std::vector<int> indices_of(IndexMask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

template <class Tag>
void add_to(std::optional<AltTensor<Tag>>& t, int n, int degree, const TermLine& term,
            int line_no) {
    if (static_cast<int>(term.indices.size()) != degree)
        throw parse_error(line_no, "expected " + std::to_string(degree) + " indices");
    if (!t) t.emplace(n, degree);
    t->add_term(mask_of(term.indices), term.coeff);
}

} // namespace

std::string kind_name(StructureKind k) {
    for (const auto& [kind, name] : kKindNames)
        if (kind == k) return name;
    return "?";
}

Manifest parse_manifest(const std::string& text) {
    // first pass: coordinates and structure
    std::vector<std::string> lines;
    {
        std::stringstream ss(text);
        std::string line;
        while (std::getline(ss, line)) lines.push_back(line);
    }
    Manifest m;
    bool have_structure = false;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        std::string s = trim(lines[li]);
        if (s.empty() || s[0] == '#') continue;
        std::size_t colon = s.find(':');
        if (colon == std::string::npos)
            throw parse_error(li + 1, "expected 'key: value'");
        std::string key = trim(s.substr(0, colon));
        std::string value = trim(s.substr(colon + 1));
        if (key == "coordinates") {
            if (!m.coords.empty()) throw parse_error(li + 1, "duplicate coordinates line");
            std::stringstream ws(value);
            std::string w;
            while (ws >> w) m.coords.push_back(w);
            if (m.coords.empty()) throw parse_error(li + 1, "no coordinates given");
        } else if (key == "structure") {
            if (have_structure) throw parse_error(li + 1, "duplicate structure line");
            bool found = false;
            for (const auto& [kind, name] : kKindNames) {
                if (value == name) {
                    m.kind = kind;
                    found = true;
                    break;
                }
            }
            if (!found) throw parse_error(li + 1, "unknown structure kind '" + value + "'");
            have_structure = true;
        }
    }
    if (m.coords.empty()) throw parse_error(0, "manifest has no coordinates line");
    if (!have_structure) throw parse_error(0, "manifest has no structure line");
    int n = m.n();

    int nambu_degree = -1;
    std::map<int, MultiVector> dist_fields;
    struct GenParts {
        std::optional<MultiVector> x;
        std::optional<Scalar> f;
        std::optional<Form> alpha;
        std::optional<Scalar> g;
    };
    std::map<int, GenParts> gen_parts;

    auto want = [&](StructureKind k, const std::string& key, int line_no) {
        if (m.kind != k)
            throw parse_error(line_no, "key '" + key + "' is not valid for structure '" +
                                           kind_name(m.kind) + "'");
    };

    for (std::size_t li = 0; li < lines.size(); ++li) {
        std::string s = trim(lines[li]);
        if (s.empty() || s[0] == '#') continue;
        int line_no = static_cast<int>(li + 1);
        std::size_t colon = s.find(':');
        std::string key = trim(s.substr(0, colon));
        std::string value = trim(s.substr(colon + 1));
        if (key == "coordinates" || key == "structure") continue;

        if (key == "assume-nonzero") {
            try {
                Scalar a = parse_expression(value, m.coords);
                if (a.is_zero()) throw parse_error(line_no, "assume-nonzero of the zero function");
                m.assumptions.push_back(std::move(a));
            } catch (const parse_error& pe) {
                throw parse_error(line_no, pe.what());
            }
            continue;
        }
        if (key == "omega") {
            if (m.kind != StructureKind::two_form && m.kind != StructureKind::lcps &&
                m.kind != StructureKind::exact_pair)
                throw parse_error(line_no, "key 'omega' is not valid for structure '" +
                                               kind_name(m.kind) + "'");
            add_to(m.omega, n, 2, parse_term(value, m.coords, line_no), line_no);
            continue;
        }
        if (key == "eta") {
            want(StructureKind::lcps, key, line_no);
            add_to(m.eta, n, 1, parse_term(value, m.coords, line_no), line_no);
            continue;
        }
        if (key == "alpha") {
            want(StructureKind::exact_pair, key, line_no);
            add_to(m.alpha, n, 1, parse_term(value, m.coords, line_no), line_no);
            continue;
        }
        if (key == "pi") {
            if (m.kind == StructureKind::nambu) {
                TermLine t = parse_term(value, m.coords, line_no);
                if (nambu_degree < 0) {
                    nambu_degree = static_cast<int>(t.indices.size());
                    if (nambu_degree < 2)
                        throw parse_error(line_no, "nambu order must be at least 2");
                }
                add_to(m.pi, n, nambu_degree, t, line_no);
            } else if (m.kind == StructureKind::bivector || m.kind == StructureKind::jacobi ||
                       m.kind == StructureKind::homogeneous) {
                add_to(m.pi, n, 2, parse_term(value, m.coords, line_no), line_no);
            } else {
                throw parse_error(line_no, "key 'pi' is not valid for structure '" +
                                               kind_name(m.kind) + "'");
            }
            continue;
        }
        if (key == "e") {
            want(StructureKind::jacobi, key, line_no);
            add_to(m.e, n, 1, parse_term(value, m.coords, line_no), line_no);
            continue;
        }
        if (key == "z") {
            want(StructureKind::homogeneous, key, line_no);
            add_to(m.z, n, 1, parse_term(value, m.coords, line_no), line_no);
            continue;
        }
        if (key == "test-function") {
            want(StructureKind::nambu, key, line_no);
            try {
                m.test_functions.push_back(parse_expression(value, m.coords));
            } catch (const parse_error& pe) {
                throw parse_error(line_no, pe.what());
            }
            continue;
        }
        if (key == "volume") {
            want(StructureKind::nambu, key, line_no);
            try {
                Scalar v = parse_expression(value, m.coords);
                if (v.is_zero()) throw parse_error(line_no, "volume coefficient is zero");
                m.volume = std::move(v);
            } catch (const parse_error& pe) {
                throw parse_error(line_no, pe.what());
            }
            continue;
        }
        if (key.rfind("field.", 0) == 0) {
            want(StructureKind::distribution, key, line_no);
            int idx = -1;
            try {
                idx = std::stoi(key.substr(6));
            } catch (...) {
                throw parse_error(line_no, "bad field key '" + key + "'");
            }
            TermLine t = parse_term(value, m.coords, line_no);
            if (t.indices.size() != 1) throw parse_error(line_no, "fields are vector fields");
            auto [it, fresh] = dist_fields.try_emplace(idx, MultiVector(n, 1));
            it->second.add_term(mask_of(t.indices), t.coeff);
            continue;
        }
        if (key.rfind("generator.", 0) == 0) {
            want(StructureKind::subbundle, key, line_no);
            std::string rest = key.substr(10);
            std::size_t dot = rest.find('.');
            if (dot == std::string::npos)
                throw parse_error(line_no, "expected generator.<k>.<part>");
            int idx = -1;
            try {
                idx = std::stoi(rest.substr(0, dot));
            } catch (...) {
                throw parse_error(line_no, "bad generator key '" + key + "'");
            }
            std::string part = rest.substr(dot + 1);
            GenParts& gp = gen_parts[idx];
            if (part == "x") {
                TermLine t = parse_term(value, m.coords, line_no);
                if (t.indices.size() != 1)
                    throw parse_error(line_no, "generator X is a vector field");
                if (!gp.x) gp.x.emplace(n, 1);
                gp.x->add_term(mask_of(t.indices), t.coeff);
            } else if (part == "alpha") {
                TermLine t = parse_term(value, m.coords, line_no);
                if (t.indices.size() != 1)
                    throw parse_error(line_no, "generator alpha is a 1-form");
                if (!gp.alpha) gp.alpha.emplace(n, 1);
                gp.alpha->add_term(mask_of(t.indices), t.coeff);
            } else if (part == "f" || part == "g") {
                try {
                    Scalar v = parse_expression(value, m.coords);
                    (part == "f" ? gp.f : gp.g) = std::move(v);
                } catch (const parse_error& pe) {
                    throw parse_error(line_no, pe.what());
                }
            } else {
                throw parse_error(line_no, "unknown generator part '" + part + "'");
            }
            continue;
        }
        throw parse_error(line_no, "unknown key '" + key + "'");
    }

    for (auto& [idx, f] : dist_fields) m.fields.push_back(std::move(f));
    for (auto& [idx, gp] : gen_parts) {
        m.generators.emplace_back(gp.x ? *gp.x : MultiVector(n, 1), gp.f ? *gp.f : Scalar(n),
                                  gp.alpha ? *gp.alpha : Form(n, 1), gp.g ? *gp.g : Scalar(n));
    }

    if (m.kind == StructureKind::distribution && m.fields.empty())
        throw parse_error(0, "distribution manifest has no fields");
    if (m.kind == StructureKind::subbundle && m.generators.empty())
        throw parse_error(0, "subbundle manifest has no generators");
    if (m.kind == StructureKind::nambu && (!m.pi || m.pi->is_zero()))
        throw parse_error(0, "nambu manifest has no multivector");
    return m;
}

namespace {

template <class Tag>
void emit_tensor(std::ostream& os, const std::string& key, const AltTensor<Tag>& t,
                 const std::vector<std::string>& coords) {
    for (const auto& [mask, c] : t.coefficients()) {
        os << key << ": [";
        auto idx = indices_of(mask);
        for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
        os << "] " << c.to_string(coords) << "\n";
    }
}

} // namespace

std::string serialize_manifest(const Manifest& m) {
    std::ostringstream os;
    os << "coordinates:";
    for (const auto& c : m.coords) os << " " << c;
    os << "\n";
    os << "structure: " << kind_name(m.kind) << "\n";
    for (const auto& a : m.assumptions)
        os << "assume-nonzero: " << a.to_string(m.coords) << "\n";
    if (m.omega) emit_tensor(os, "omega", *m.omega, m.coords);
    if (m.eta) emit_tensor(os, "eta", *m.eta, m.coords);
    if (m.alpha) emit_tensor(os, "alpha", *m.alpha, m.coords);
    if (m.pi) emit_tensor(os, "pi", *m.pi, m.coords);
    if (m.e) emit_tensor(os, "e", *m.e, m.coords);
    if (m.z) emit_tensor(os, "z", *m.z, m.coords);
    for (std::size_t k = 0; k < m.fields.size(); ++k)
        emit_tensor(os, "field." + std::to_string(k), m.fields[k], m.coords);
    for (std::size_t k = 0; k < m.generators.size(); ++k) {
        const E1Section& g = m.generators[k];
        std::string base = "generator." + std::to_string(k);
        emit_tensor(os, base + ".x", g.x, m.coords);
        if (!g.f.is_zero()) os << base << ".f: " << g.f.to_string(m.coords) << "\n";
        emit_tensor(os, base + ".alpha", g.alpha, m.coords);
        if (!g.g.is_zero()) os << base << ".g: " << g.g.to_string(m.coords) << "\n";
    }
    for (const auto& f : m.test_functions)
        os << "test-function: " << f.to_string(m.coords) << "\n";
    if (m.volume) os << "volume: " << m.volume->to_string(m.coords) << "\n";
    return os.str();
}

SubBundle manifest_bundle(const Manifest& m) {
    int n = m.n();
    auto zero2 = [n] { return Form(n, 2); };
    auto zero1f = [n] { return Form(n, 1); };
    auto zero2v = [n] { return MultiVector(n, 2); };
    auto zero1v = [n] { return MultiVector(n, 1); };
    switch (m.kind) {
        case StructureKind::two_form:
            return graph_of_two_form(m.omega ? *m.omega : zero2(), m.assumptions);
        case StructureKind::bivector:
            return graph_of_bivector(m.pi ? *m.pi : zero2v(), m.assumptions);
        case StructureKind::distribution:
            return graph_of_distribution(m.fields, m.assumptions);
        case StructureKind::jacobi:
            return graph_of_jacobi(m.pi ? *m.pi : zero2v(), m.e ? *m.e : zero1v(),
                                   m.assumptions);
        case StructureKind::lcps:
            return graph_of_lcps(m.omega ? *m.omega : zero2(), m.eta ? *m.eta : zero1f(),
                                 m.assumptions);
        case StructureKind::homogeneous:
            return graph_of_homogeneous(m.pi ? *m.pi : zero2v(), m.z ? *m.z : zero1v(),
                                        m.assumptions);
        case StructureKind::exact_pair:
            return graph_of_exact_pair(m.omega ? *m.omega : zero2(),
                                       m.alpha ? *m.alpha : zero1f(), m.assumptions);
        case StructureKind::subbundle:
            return SubBundle(n, m.generators, m.assumptions);
        case StructureKind::nambu:
            throw error("a nambu manifest does not define a sub-bundle directly");
    }
    throw error("unreachable");
}

Manifest manifest_from_bundle(const SubBundle& l, std::vector<std::string> coords) {
    if (static_cast<int>(coords.size()) != l.n)
        throw chart_mismatch("coordinate names do not match the bundle chart");
    Manifest m;
    m.coords = std::move(coords);
    m.kind = StructureKind::subbundle;
    m.assumptions = l.assumptions;
    m.generators = l.generators;
    return m;
}

std::string Report::to_string() const {
    std::string out;
    for (const auto& [k, v] : entries) out += k + ": " + v + "\n";
    return out;
}

} // namespace e1dirac
