#include "nsalg/bmodule.hpp"

#include "nsalg/algebra.hpp"
#include "nsalg/errors.hpp"

namespace nsalg {

std::vector<Generator> BModuleSpec::window() const {
    std::vector<Generator> out;
    const int lo_even = mfloor ? *mfloor + 1 : 0;
    for (int i = lo_even; i <= t; ++i) out.push_back(Generator::L(i));
    const int lo_odd = mfloor ? *mfloor + 1 : 1;
    for (int i = lo_odd; i <= t; ++i) out.push_back(Generator::G_halves(2 * i - 1));
    return out;
}

bool BModuleSpec::in_window(const Generator& g) const {
    if (g.kind == GenKind::C) return false;
    const std::int64_t tw = g.index.twice;
    if (g.kind == GenKind::L) {
        const std::int64_t lo = mfloor ? 2 * (*mfloor + 1) : 0;
        return tw >= lo && tw <= 2 * t;
    }
    const std::int64_t lo = mfloor ? 2 * *mfloor + 1 : 1;
    return tw >= lo && tw <= 2 * t - 1;
}

Matrix BModuleSpec::matrix_of(const Generator& g) const {
    auto it = action.find(g);
    if (it != action.end()) return it->second;
    return Matrix(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
}

std::string ValidationReport::str() const {
    if (violations.empty()) return "valid";
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += "\n";
        out += v.what;
    }
    return out;
}

ValidationReport validate_bmodule(const BModuleSpec& spec) {
    if (spec.dim <= 0) throw SpecError("module dimension must be positive");
    if (static_cast<int>(spec.parity.size()) != spec.dim)
        throw SpecError("parity vector length differs from dimension");
    if (spec.t < 0) throw SpecError("truncation level must be nonnegative");
    if (spec.mfloor && (*spec.mfloor < 0 || *spec.mfloor >= spec.t))
        throw SpecError("m-floor must satisfy 0 <= k < t");
    for (const auto& [g, m] : spec.action) {
        if (!spec.in_window(g))
            throw SpecError("action key " + g.str() + " outside the generator window");
        if (m.rows() != static_cast<std::size_t>(spec.dim) ||
            m.cols() != static_cast<std::size_t>(spec.dim))
            throw SpecError("matrix for " + g.str() + " is not dim x dim");
    }

    ValidationReport report;
    const auto gens = spec.window();

    // parity blocks
    for (const auto& g : gens) {
        auto it = spec.action.find(g);
        if (it == spec.action.end()) continue;
        const Matrix& m = it->second;
        for (int i = 0; i < spec.dim; ++i)
            for (int j = 0; j < spec.dim; ++j) {
                if (m.at(i, j).is_zero()) continue;
                const int want = (static_cast<int>(spec.parity[j]) + (g.is_odd() ? 1 : 0)) % 2;
                if (static_cast<int>(spec.parity[i]) != want) {
                    report.violations.push_back(
                        {"parity violation: " + g.str() + " entry (" + std::to_string(i) + "," +
                             std::to_string(j) + ") crosses the wrong block",
                         std::nullopt});
                    goto next_gen;
                }
            }
    next_gen:;
    }

    // bracket compatibility on every defined pair
    for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = a; b < gens.size(); ++b) {
            const Generator &x = gens[a], &y = gens[b];
            const Matrix mx = spec.matrix_of(x);
            const Matrix my = spec.matrix_of(y);
            Matrix lhs = mx * my;
            if (x.is_odd() && y.is_odd()) lhs = lhs + my * mx;
            else lhs = lhs - my * mx;

            Matrix rhs(static_cast<std::size_t>(spec.dim), static_cast<std::size_t>(spec.dim));
            const Element br = bracket(x, y);
            for (const auto& [mono, coeff] : br.terms()) {
                if (mono.c_power > 0) continue; // no central terms inside the positive side
                const Generator& z = mono.factors.at(0);
                if (!spec.in_window(z)) continue; // acts as zero in the quotient
                rhs = rhs + spec.matrix_of(z) * coeff;
            }
            if (!(lhs == rhs)) {
                report.violations.push_back(
                    {"bracket violation on (" + x.str() + ", " + y.str() + ")",
                     std::make_pair(x, y)});
            }
        }
    }
    return report;
}

namespace {

void require_relation(const Matrix& lhs, const Matrix& rhs, const std::string& name) {
    if (!(lhs == rhs)) throw PreconditionError("input violates the relation " + name);
}

Matrix block2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    const std::size_t n = a.rows();
    Matrix out(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out.at(i, j) = a.at(i, j);
            out.at(i, n + j) = b.at(i, j);
            out.at(n + i, j) = c.at(i, j);
            out.at(n + i, n + j) = d.at(i, j);
        }
    return out;
}

} // namespace

BModuleSpec extend_b1(const Matrix& L0, const Matrix& L1) {
    const std::size_t n = L0.rows();
    if (L0.cols() != n || L1.rows() != n || L1.cols() != n)
        throw SpecError("extend_b1 needs square matrices of equal dimension");
    require_relation(L0 * L1 - L1 * L0, L1 * Rational(-1), "[L0, L1] = -L1");

    const Matrix zero(n, n);
    const Matrix id = Matrix::identity(n);
    const Matrix half_id = id * Rational(1, 2);

    BModuleSpec spec;
    spec.t = 1;
    spec.dim = static_cast<int>(2 * n);
    spec.parity.assign(n, Parity::Even);
    spec.parity.insert(spec.parity.end(), n, Parity::Odd);
    spec.action[Generator::L(0)] = block2(L0, zero, zero, L0 - half_id);
    spec.action[Generator::L(1)] = block2(L1, zero, zero, L1);
    spec.action[Generator::G_halves(1)] = block2(zero, L1, id, zero);
    return spec;
}

BModuleSpec extend_b2(const Matrix& L0, const Matrix& L1, const Matrix& L2) {
    const std::size_t n = L0.rows();
    if (L0.cols() != n || L1.rows() != n || L1.cols() != n || L2.rows() != n || L2.cols() != n)
        throw SpecError("extend_b2 needs square matrices of equal dimension");
    require_relation(L0 * L1 - L1 * L0, L1 * Rational(-1), "[L0, L1] = -L1");
    require_relation(L0 * L2 - L2 * L0, L2 * Rational(-2), "[L0, L2] = -2*L2");
    require_relation(L1 * L2 - L2 * L1, Matrix(n, n), "[L1, L2] = 0");

    const Matrix zero(n, n);

    BModuleSpec spec = extend_b1(L0, L1);
    spec.t = 2;
    spec.action[Generator::L(2)] = block2(L2, zero, zero, L2);
    spec.action[Generator::G_halves(3)] = block2(zero, L2 * Rational(2), zero, zero);
    return spec;
}

bool check_homomorphism(const WhittakerData& psi) {
    if (psi.k < 0) throw SpecError("character order k must be nonnegative");
    for (const auto& [level, value] : psi.values) {
        if (level <= psi.k)
            throw SpecError("character value on L(" + std::to_string(level) +
                            ") lies below the positive subalgebra");
        (void)value;
    }

    int max_level = 2 * psi.k + 2;
    for (const auto& [level, value] : psi.values)
        if (!value.is_zero() && level > max_level) max_level = level;

    auto psi_of = [&](const Element& e) {
        Rational out(0);
        for (const auto& [mono, coeff] : e.terms()) {
            if (mono.c_power > 0) continue;
            const Generator& z = mono.factors.at(0);
            if (z.kind == GenKind::L) out += coeff * psi.value(static_cast<int>(z.index.as_integer()));
            // odd generators map to zero
        }
        return out;
    };

    // Pairs of positive-side generators whose bracket could land on a stored value.
    std::vector<Generator> gens;
    for (int m = psi.k + 1; m <= max_level; ++m) gens.push_back(Generator::L(m));
    for (int m = psi.k + 1; 2 * m + 1 <= 2 * max_level; ++m)
        gens.push_back(Generator::G_halves(2 * m + 1)); // G_{m + 1/2}
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a; b < gens.size(); ++b) {
            if ((gens[a].grade() + gens[b].grade()).twice > 2 * max_level) continue;
            if (!psi_of(bracket(gens[a], gens[b])).is_zero()) return false;
        }
    return true;
}

BModuleSpec whittaker_bmodule(const WhittakerData& psi) {
    if (!check_homomorphism(psi))
        throw PreconditionError("character is not a homomorphism on the positive subalgebra");

    const int k = psi.k;
    BModuleSpec spec;
    spec.t = 2 * k + 2;
    spec.dim = 2;
    spec.parity = {Parity::Even, Parity::Odd}; // w, u = G_{k+1/2} w
    spec.mfloor = k;

    auto diag = [&](const Rational& q) {
        Matrix m(2, 2);
        m.at(0, 0) = q;
        m.at(1, 1) = q;
        return m;
    };
    for (int i = k + 1; i <= 2 * k + 2; ++i) {
        const Rational v = psi.value(i);
        if (!v.is_zero()) spec.action[Generator::L(i)] = diag(v);
    }
    {
        // G_{k+1/2}: w -> u, u -> psi(L_{2k+1}) w
        Matrix g(2, 2);
        g.at(1, 0) = Rational(1);
        g.at(0, 1) = psi.value(2 * k + 1);
        spec.action[Generator::G_halves(2 * k + 1)] = g;
    }
    {
        // G_{k+3/2}: u -> 2 psi(L_{2k+2}) w
        const Rational v = psi.value(2 * k + 2);
        if (!v.is_zero()) {
            Matrix g(2, 2);
            g.at(0, 1) = v * Rational(2);
            spec.action[Generator::G_halves(2 * k + 3)] = g;
        }
    }
    return spec;
}

} // namespace nsalg
