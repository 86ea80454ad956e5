#include "nsalg/io.hpp"

#include <cctype>
#include <fstream>

#include "nsalg/algebra.hpp"
#include "nsalg/errors.hpp"

namespace nsalg {

namespace {

using json = nlohmann::json;

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    // multi-byte literal (for the tensor sign)
    bool eat_literal(std::string_view lit) {
        skip_ws();
        if (s.substr(pos, lit.size()) == lit) {
            pos += lit.size();
            return true;
        }
        return false;
    }
    std::string take_int() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && s[pos] == '-') ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && s[start] == '-'))
            throw ParseError("expected an integer at position " + std::to_string(start) + " in '" +
                             std::string(s) + "'");
        return std::string(s.substr(start, pos - start));
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(pos) + " in '" + std::string(s) +
                         "'");
    }
};

HalfInt parse_index(Cursor& c) {
    const std::string num = c.take_int();
    if (c.eat('/')) {
        const std::string den = c.take_int();
        if (den != "2") c.fail("only halves are valid generator indices");
        return HalfInt::halves(std::stoll(num));
    }
    return HalfInt::whole(std::stoll(num));
}

// generator at the cursor, or nullopt if the upcoming token is not one
std::optional<Generator> try_generator(Cursor& c) {
    c.skip_ws();
    if (c.pos >= c.s.size()) return std::nullopt;
    const char head = c.s[c.pos];
    if (head == 'c') {
        ++c.pos;
        return Generator::central();
    }
    if (head != 'L' && head != 'G') return std::nullopt;
    ++c.pos;
    if (!c.eat('(')) c.fail("expected '(' after generator kind");
    const HalfInt idx = parse_index(c);
    if (!c.eat(')')) c.fail("expected ')' after generator index");
    if (head == 'L') {
        if (!idx.is_integer()) c.fail("L index must be an integer");
        return Generator::L(idx.as_integer());
    }
    if (idx.is_integer()) c.fail("G index must be half-odd");
    return Generator::G(idx);
}

Rational parse_rational_token(Cursor& c) {
    const std::string num = c.take_int();
    std::string text = num;
    c.skip_ws();
    if (c.pos < c.s.size() && c.s[c.pos] == '/') {
        ++c.pos;
        text += "/" + c.take_int();
    }
    return Rational::from_string(text);
}

// word with optional '*' separators and '^k' powers; empty words not allowed
std::vector<Generator> parse_word_at(Cursor& c) {
    std::vector<Generator> word;
    while (true) {
        auto g = try_generator(c);
        if (!g) break;
        std::size_t reps = 1;
        if (c.eat('^')) reps = static_cast<std::size_t>(std::stoll(c.take_int()));
        for (std::size_t r = 0; r < reps; ++r) word.push_back(*g);
        c.eat('*'); // optional separator before the next factor
    }
    if (word.empty()) c.fail("expected a generator");
    return word;
}

} // namespace

Generator parse_generator(std::string_view text) {
    Cursor c{text};
    auto g = try_generator(c);
    if (!g) c.fail("expected a generator");
    if (!c.eof()) c.fail("trailing characters after generator");
    return *g;
}

std::vector<Generator> parse_word(std::string_view text) {
    Cursor c{text};
    auto word = parse_word_at(c);
    if (!c.eof()) c.fail("trailing characters after word");
    return word;
}

namespace {

// shared term scanner for elements and module vectors
template <class EmitTerm>
void parse_sum(Cursor& c, const EmitTerm& emit) {
    bool first = true;
    while (!c.eof()) {
        Rational sign(1);
        if (first) {
            if (c.eat('-')) sign = Rational(-1);
            first = false;
        } else {
            if (c.eat('+')) sign = Rational(1);
            else if (c.eat('-')) sign = Rational(-1);
            else c.fail("expected '+' or '-' between terms");
        }

        Rational coeff(1);
        bool have_coeff = false;
        c.skip_ws();
        if (c.pos < c.s.size() &&
            (std::isdigit(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '-')) {
            coeff = parse_rational_token(c);
            have_coeff = true;
            c.eat('*');
        }
        c.skip_ws();
        const bool word_follows = c.pos < c.s.size() &&
                                  (c.s[c.pos] == 'L' || c.s[c.pos] == 'G' || c.s[c.pos] == 'c' ||
                                   c.s[c.pos] == '1');
        if (!word_follows) {
            if (!have_coeff) c.fail("expected a term");
            emit(std::vector<Generator>{}, sign * coeff);
            continue;
        }
        if (c.s[c.pos] == '1') {
            ++c.pos; // explicit identity word
            emit(std::vector<Generator>{}, sign * coeff);
            continue;
        }
        emit(parse_word_at(c), sign * coeff);
    }
}

} // namespace

Element parse_element(std::string_view text) {
    Cursor c{text};
    c.skip_ws();
    if (c.s.substr(c.pos) == "0") return Element::zero();
    Element out;
    parse_sum(c, [&](const std::vector<Generator>& word, const Rational& coeff) {
        Element t = normal_order(word);
        t *= coeff;
        out += t;
    });
    return out;
}

IndVector parse_ind_vector(std::string_view text, const InducedModule& M) {
    std::map<std::string, int> labels;
    for (int b = 0; b < M.base().dim(); ++b) labels[M.base().label(b)] = b;

    Cursor c{text};
    c.skip_ws();
    if (c.s.substr(c.pos) == "0") return IndVector{};

    IndVector out;
    bool first = true;
    while (!c.eof()) {
        Rational sign(1);
        if (first) {
            if (c.eat('-')) sign = Rational(-1);
            first = false;
        } else {
            if (c.eat('+')) sign = Rational(1);
            else if (c.eat('-')) sign = Rational(-1);
            else c.fail("expected '+' or '-' between terms");
        }
        Rational coeff(1);
        c.skip_ws();
        if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
            coeff = parse_rational_token(c);
            c.eat('*');
        }
        std::vector<Generator> word;
        c.skip_ws();
        if (c.pos < c.s.size() && c.s[c.pos] == '1' ) {
            ++c.pos;
        } else if (c.pos < c.s.size() && (c.s[c.pos] == 'L' || c.s[c.pos] == 'G')) {
            word = parse_word_at(c);
        }
        if (!c.eat_literal("⊗") && !c.eat('#')) c.fail("expected '⊗' before the basis label");
        // label: longest match among the module's labels
        c.skip_ws();
        std::string best;
        int best_idx = -1;
        for (const auto& [label, idx] : labels) {
            if (c.s.substr(c.pos, label.size()) == label && label.size() > best.size()) {
                best = label;
                best_idx = idx;
            }
        }
        if (best_idx < 0) c.fail("unknown basis label");
        c.pos += best.size();

        BasisKey key;
        key.base = best_idx;
        for (const auto& f : word) {
            if (f.kind == GenKind::C) c.fail("central factors do not appear in module words");
            if (f.index.twice >= 0) c.fail("module words use negative-index factors only");
            if (f.is_odd()) {
                const int pos = static_cast<int>((1 - f.index.twice) / 2);
                if (key.k.has(pos)) c.fail("repeated odd factor in module word");
                key.k.insert(pos);
            } else {
                key.i.bump(static_cast<int>(-f.index.as_integer()), 1);
            }
        }
        out.add(key, sign * coeff);
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON formats
// ---------------------------------------------------------------------------

namespace {

std::string action_key(const Generator& g) {
    if (g.kind == GenKind::L) return "L" + std::to_string(g.index.as_integer());
    return "G" + std::to_string(g.index.twice) + "/2";
}

Generator parse_action_key(const std::string& key) {
    if (key.empty()) throw ParseError("empty action key");
    Cursor c{key};
    if (key[0] == 'L') {
        ++c.pos;
        return Generator::L(std::stoll(c.take_int()));
    }
    if (key[0] == 'G') {
        ++c.pos;
        const std::string num = c.take_int();
        if (!c.eat('/') || c.take_int() != "2" || !c.eof())
            throw ParseError("malformed odd action key '" + key + "'");
        return Generator::G_halves(std::stoll(num));
    }
    throw ParseError("unknown action key '" + key + "'");
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw ParseError("matrix must have dim rows");
    Matrix m(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    for (int r = 0; r < dim; ++r) {
        const auto& row = j.at(static_cast<std::size_t>(r));
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw ParseError("matrix row must have dim entries");
        for (int c = 0; c < dim; ++c)
            m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                Rational::from_string(row.at(static_cast<std::size_t>(c)).get<std::string>());
    }
    return m;
}

} // namespace

json spec_to_json(const BModuleSpec& spec) {
    json j;
    j["t"] = spec.t;
    j["dim"] = spec.dim;
    json parity = json::array();
    for (auto p : spec.parity) parity.push_back(p == Parity::Even ? "even" : "odd");
    j["parity"] = std::move(parity);
    json action = json::object();
    for (const auto& [g, m] : spec.action) action[action_key(g)] = matrix_to_json(m);
    j["action"] = std::move(action);
    if (spec.mfloor) j["base"] = json{{"kind", "m"}, {"k", *spec.mfloor}};
    return j;
}

BModuleSpec spec_from_json(const json& j) {
    BModuleSpec spec;
    try {
        spec.t = j.at("t").get<int>();
        spec.dim = j.at("dim").get<int>();
        for (const auto& p : j.at("parity")) {
            const std::string text = p.get<std::string>();
            if (text == "even") spec.parity.push_back(Parity::Even);
            else if (text == "odd") spec.parity.push_back(Parity::Odd);
            else throw ParseError("parity entries must be \"even\" or \"odd\"");
        }
        if (j.contains("base")) {
            const auto& base = j.at("base");
            const std::string kind = base.at("kind").get<std::string>();
            if (kind == "m") spec.mfloor = base.at("k").get<int>();
            else if (kind != "b") throw ParseError("base kind must be \"b\" or \"m\"");
        }
        for (const auto& [key, value] : j.at("action").items())
            spec.action[parse_action_key(key)] = matrix_from_json(value, spec.dim);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed module spec JSON: ") + e.what());
    }
    return spec;
}

json whittaker_to_json(const WhittakerData& psi) {
    json values = json::object();
    for (const auto& [level, q] : psi.values) values["L" + std::to_string(level)] = q.str();
    return json{{"k", psi.k}, {"values", std::move(values)}, {"ell", psi.ell.str()}};
}

WhittakerData whittaker_from_json(const json& j) {
    WhittakerData psi;
    try {
        psi.k = j.at("k").get<int>();
        psi.ell = Rational::from_string(j.at("ell").get<std::string>());
        for (const auto& [key, value] : j.at("values").items()) {
            if (key.empty() || key[0] != 'L')
                throw ParseError("character values are keyed by even generators, got '" + key + "'");
            psi.values[std::stoi(key.substr(1))] = Rational::from_string(value.get<std::string>());
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed character JSON: ") + e.what());
    }
    return psi;
}

json expvec_to_json(const ExpVec& v) {
    json j = json::object();
    for (auto [pos, mult] : v.entries()) j[std::to_string(pos)] = mult;
    return j;
}

json oddexpvec_to_json(const OddExpVec& v) {
    json j = json::object();
    for (int pos : v.positions()) j[std::to_string(pos)] = 1;
    return j;
}

json ind_vector_to_json(const IndVector& v, const InducedModule& M) {
    json terms = json::array();
    for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
        terms.push_back(json{{"k", oddexpvec_to_json(it->first.k)},
                             {"i", expvec_to_json(it->first.i)},
                             {"basis", it->first.base},
                             {"label", M.base().label(it->first.base)},
                             {"coeff", it->second.str()}});
    }
    return terms;
}

json validation_to_json(const ValidationReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations) {
        json item{{"what", v.what}};
        if (v.pair) item["pair"] = json::array({v.pair->first.str(), v.pair->second.str()});
        violations.push_back(std::move(item));
    }
    return json{{"valid", report.ok()}, {"violations", std::move(violations)}};
}

json simplicity_to_json(const SimplicityReport& report, const InducedModule& M) {
    json j;
    j["verdict"] = verdict_str(report.verdict);
    j["seed"] = report.seed;
    if (!report.note.empty()) j["note"] = report.note;
    if (report.witness) {
        j["witness"] = M.format(*report.witness);
        j["witness_terms"] = ind_vector_to_json(*report.witness, M);
        j["witness_subspace_dim"] = report.witness_basis.size();
    }
    return j;
}

json trace_to_json(const ReductionTrace& trace, const InducedModule& M) {
    json steps = json::array();
    for (const auto& step : trace.steps)
        steps.push_back(json{{"generator", step.applied.str()},
                             {"degree", json{{"i", expvec_to_json(step.deg_i)},
                                             {"k", oddexpvec_to_json(step.deg_k)}}}});
    return json{{"steps", std::move(steps)}, {"terminal", M.format(trace.terminal)}};
}

json singular_to_json(const SingularReport& report, const InducedModule& M) {
    json vectors = json::array();
    for (const auto& v : report.vectors) vectors.push_back(M.format(v));
    json j{{"level", report.level.str()}, {"vectors", std::move(vectors)}};
    json system = json::array();
    for (std::size_t r = 0; r < report.system.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < report.system.cols(); ++c)
            row.push_back(report.system.at(r, c).str());
        system.push_back(std::move(row));
    }
    j["system"] = std::move(system);
    if (report.det) j["det"] = report.det->str();
    return j;
}

BModuleSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open spec file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON in '") + path + "': " + e.what());
    }
    return spec_from_json(j);
}

} // namespace nsalg
