#include "hasselab/invariants.hpp"

#include <cstdint>

#include "hasselab/primes.hpp"

namespace hasselab {

namespace {

struct InvariantTerm {
    std::uint8_t e[10];
    long long c;
};

#include "ternary_invariant_tables.inc"

Int eval_invariant_table(const InvariantTerm* terms, std::size_t n, const std::vector<Int>& c) {
    Int total(0), t;
    for (std::size_t i = 0; i < n; ++i) {
        t = terms[i].c;
        for (int v = 0; v < 10; ++v)
            for (int k = 0; k < terms[i].e[v]; ++k) t *= c[v];
        total += t;
    }
    return total;
}

// classical binary quartic invariants
void quartic_IJ(const std::vector<Int>& q, Int& I, Int& J) {
    const Int &a = q[0], &b = q[1], &c = q[2], &d = q[3], &e = q[4];
    I = 12 * a * e - 3 * b * d + c * c;
    J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * b * b * e - 2 * c * c * c;
}

}  // namespace

InvariantPair invariants(const GenusOneModel& model) {
    if (model.kind.n == 2) {
        Int I, J;
        quartic_IJ(model.coeffs, I, J);
        return {make_rat(-I, Int(3)), make_rat(-J, Int(27))};
    }
    if (model.kind.n == 3) {
        Int S = eval_invariant_table(kTernaryS, std::size(kTernaryS), model.coeffs);
        Int T = eval_invariant_table(kTernaryT, std::size(kTernaryT), model.coeffs);
        return {make_rat(S, Int(-48)), make_rat(T, Int(864))};
    }
    return invariants(resolvent_quartic(model));
}

Rat discriminant(const GenusOneModel& model) {
    auto [A, B] = invariants(model);
    return Rat(-16) * (Rat(4) * A * A * A + Rat(27) * B * B);
}

Int discriminant_int(const GenusOneModel& model) {
    Rat d = discriminant(model);
    if (!is_integral(d)) throw std::logic_error("discriminant is not integral");
    return num(d);
}

JacobianResult jacobian(const GenusOneModel& model) {
    auto [A, B] = invariants(model);
    if (Rat(4) * A * A * A + Rat(27) * B * B == 0)
        throw std::domain_error("degenerate model: discriminant vanishes");
    for (int lambda : {1, 2, 3, 6}) {
        Rat As = A * pow_int(Int(lambda), 4);
        Rat Bs = B * pow_int(Int(lambda), 6);
        if (is_integral(As) && is_integral(Bs))
            return {WeierstrassCurve{num(As), num(Bs)}, lambda};
    }
    throw std::logic_error("invariant denominators not cleared by lambda in {1,2,3,6}");
}

Int WeierstrassCurve::height() const {
    Int a3 = abs(A);
    a3 = a3 * a3 * a3;
    Int b2 = B * B;
    return a3 > b2 ? a3 : b2;
}

Int height(const WeierstrassCurve& curve) { return curve.height(); }

namespace {

constexpr long kPointCountPrimeCap = 199;

std::uint64_t to_u64_mod(const Int& a, std::uint64_t p) {
    Int r = mod_pos(a, Int((unsigned long)p));
    return r.get_ui();
}

std::vector<char> square_table(std::uint64_t p) {
    std::vector<char> qr(p, 0);
    for (std::uint64_t t = 0; t <= p / 2; ++t) qr[(t * t) % p] = 1;
    return qr;
}

}  // namespace

Int count_points_curve_mod_p(const WeierstrassCurve& curve, const Int& pz) {
    if (!is_prime(pz)) throw std::invalid_argument("p must be prime");
    if (pz > kPointCountPrimeCap) throw std::invalid_argument("point counting is capped at p <= 199");
    if (mod_pos(Int(6) * curve.disc(), pz) == 0)
        throw std::invalid_argument("bad reduction: p divides 6*disc");
    std::uint64_t p = pz.get_ui();
    std::uint64_t A = to_u64_mod(curve.A, p), B = to_u64_mod(curve.B, p);
    auto qr = square_table(p);
    std::uint64_t n = 1;  // the point at infinity
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t rhs = (((x * x) % p) * x + A * x + B) % p;
        if (rhs == 0)
            n += 1;
        else if (qr[rhs])
            n += 2;
    }
    return Int((unsigned long)n);
}

Int count_points_model_mod_p(const GenusOneModel& model, const Int& pz) {
    if (!is_prime(pz)) throw std::invalid_argument("p must be prime");
    if (pz > kPointCountPrimeCap) throw std::invalid_argument("point counting is capped at p <= 199");
    if (mod_pos(discriminant_int(model), pz) == 0)
        throw std::invalid_argument("bad reduction: p divides the discriminant");
    if (model.kind.n != 3 && pz == 2)
        throw std::invalid_argument("p = 2 is a bad prime for this model kind");
    std::uint64_t p = pz.get_ui();
    std::vector<std::uint64_t> c;
    for (const auto& x : model.coeffs) c.push_back(to_u64_mod(x, p));

    if (model.kind.n == 2) {
        auto qr = square_table(p);
        auto f = [&](std::uint64_t x, std::uint64_t y) {
            std::uint64_t x2 = (x * x) % p, y2 = (y * y) % p;
            std::uint64_t x3 = (x2 * x) % p, y3 = (y2 * y) % p;
            return (c[0] * ((x2 * x2) % p) + c[1] * ((x3 * y) % p) + c[2] * ((x2 * y2) % p) +
                    c[3] * ((x * y3) % p) + c[4] * ((y2 * y2) % p)) %
                   p;
        };
        std::uint64_t n = 0;
        auto add = [&](std::uint64_t v) { n += (v == 0) ? 1 : (qr[v] ? 2 : 0); };
        for (std::uint64_t y = 0; y < p; ++y) add(f(1, y));
        add(f(0, 1));
        return Int((unsigned long)n);
    }
    if (model.kind.n == 3) {
        auto f = [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
            std::uint64_t v = 0;
            for (int i = 0; i < 10; ++i) {
                std::uint64_t t = c[i];
                for (int k = 0; k < kTernaryMonomials[i][0]; ++k) t = (t * x) % p;
                for (int k = 0; k < kTernaryMonomials[i][1]; ++k) t = (t * y) % p;
                for (int k = 0; k < kTernaryMonomials[i][2]; ++k) t = (t * z) % p;
                v += t;
            }
            return v % p;
        };
        std::uint64_t n = 0;
        for (std::uint64_t y = 0; y < p; ++y)
            for (std::uint64_t z = 0; z < p; ++z)
                if (f(1, y, z) == 0) ++n;
        for (std::uint64_t z = 0; z < p; ++z)
            if (f(0, 1, z) == 0) ++n;
        if (f(0, 0, 1) == 0) ++n;
        return Int((unsigned long)n);
    }
    auto q_eval = [&](int off, const std::uint64_t v[4]) {
        std::uint64_t s = 0;
        for (int i = 0; i < 10; ++i)
            s += c[off + i] * ((v[kQuadricIndex[i][0]] * v[kQuadricIndex[i][1]]) % p) % p;
        return s % p;
    };
    std::uint64_t n = 0;
    auto test = [&](std::uint64_t a, std::uint64_t b, std::uint64_t d, std::uint64_t e) {
        std::uint64_t v[4] = {a, b, d, e};
        if (q_eval(0, v) == 0 && q_eval(10, v) == 0) ++n;
    };
    for (std::uint64_t x2 = 0; x2 < p; ++x2)
        for (std::uint64_t x3 = 0; x3 < p; ++x3)
            for (std::uint64_t x4 = 0; x4 < p; ++x4) test(1, x2, x3, x4);
    for (std::uint64_t x3 = 0; x3 < p; ++x3)
        for (std::uint64_t x4 = 0; x4 < p; ++x4) test(0, 1, x3, x4);
    for (std::uint64_t x4 = 0; x4 < p; ++x4) test(0, 0, 1, x4);
    test(0, 0, 0, 1);
    return Int((unsigned long)n);
}

}  // namespace hasselab
