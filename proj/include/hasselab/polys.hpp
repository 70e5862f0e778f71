#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "hasselab/integer.hpp"

namespace hasselab {

// ---------------------------------------------------------------------------
// univariate integer polynomials, dense, index = power, no trailing zeros
// ---------------------------------------------------------------------------
using ZPoly = std::vector<Int>;
using QPoly = std::vector<Rat>;

void z_normalize(ZPoly& f);
int z_degree(const ZPoly& f);  // -1 for the zero polynomial
Int z_eval(const ZPoly& f, const Int& x);
Rat z_eval(const ZPoly& f, const Rat& x);
ZPoly z_derivative(const ZPoly& f);
Int z_content(const ZPoly& f);
ZPoly z_primitive(const ZPoly& f);
ZPoly z_mul(const ZPoly& f, const ZPoly& g);
ZPoly z_add(const ZPoly& f, const ZPoly& g);
ZPoly z_scale(const ZPoly& f, const Int& c);
ZPoly z_gcd(const ZPoly& f, const ZPoly& g);      // primitive PRS, result primitive
ZPoly z_squarefree_part(const ZPoly& f);

// ---------------------------------------------------------------------------
// real roots (Sturm) and exact rational roots
// ---------------------------------------------------------------------------
struct RootInterval {
    std::optional<Rat> exact;  // set when the root itself was pinned exactly
    Rat lo, hi;                // otherwise: open interval with exactly one root
};

int count_real_roots(const ZPoly& f);  // distinct real roots
std::vector<RootInterval> isolate_real_roots(const ZPoly& f);  // f squarefree
// shrink an isolating interval below the given width (bisection)
void refine_interval(const ZPoly& f, RootInterval& iv, const Rat& width);
// simplest rational (smallest denominator) in the closed interval [lo, hi]
Rat simplest_rational_in(const Rat& lo, const Rat& hi);
// all rational roots, each exactly verified
std::vector<Rat> rational_roots(const ZPoly& f);

// ---------------------------------------------------------------------------
// homogeneous binary forms; c[i] = coefficient of x^(deg-i) y^i
// ---------------------------------------------------------------------------
struct BinForm {
    int deg = 0;
    std::vector<Int> c;

    BinForm() = default;
    BinForm(int d, std::vector<Int> coeffs) : deg(d), c(std::move(coeffs)) {}
    Int eval(const Int& x, const Int& y) const;
    bool is_zero() const;
    ZPoly dehomogenized() const;  // f(t, 1)
};

// primitive projective roots (x : y), y >= 0, gcd(x,y) = 1
std::vector<std::pair<Int, Int>> projective_rational_roots(const BinForm& f);

// ---------------------------------------------------------------------------
// exact linear algebra / interpolation helpers
// ---------------------------------------------------------------------------
Int int_det(std::vector<std::vector<Int>> m);  // Bareiss, square matrix
// coefficients of the unique degree <= values.size()-1 integer polynomial
// with f(k) = values[k]; throws if the interpolant is not integral
ZPoly interpolate_at_small_points(const std::vector<Int>& values);

// ---------------------------------------------------------------------------
// arithmetic mod p (p an arbitrary-precision prime)
// ---------------------------------------------------------------------------
struct Fp {
    Int p;
    explicit Fp(Int prime) : p(std::move(prime)) {}
    Int reduce(const Int& a) const { return mod_pos(a, p); }
    Int add(const Int& a, const Int& b) const { return mod_pos(a + b, p); }
    Int sub(const Int& a, const Int& b) const { return mod_pos(a - b, p); }
    Int mul(const Int& a, const Int& b) const { return mod_pos(a * b, p); }
    Int inv(const Int& a) const;
    Int pow(const Int& a, const Int& e) const;
    bool is_square(const Int& a) const;                  // of a reduced nonzero a
    std::optional<Int> sqrt(const Int& a) const;         // Tonelli-Shanks
};

// distinct roots in F_p of a polynomial of any degree <= 4 (seeded splitting)
std::vector<Int> roots_mod_p(const ZPoly& f, const Fp& K);

// ---------------------------------------------------------------------------
// small dense multivariate integer polynomials (<= 3 variables)
// ---------------------------------------------------------------------------
struct MPoly {
    int nvars = 0;
    // terms: exponent triple -> coefficient; kept sorted by exponents
    std::vector<std::pair<std::array<std::uint8_t, 3>, Int>> terms;

    static MPoly zero(int nv) { return MPoly{nv, {}}; }
    void add_term(const std::array<std::uint8_t, 3>& e, const Int& c);
    Int eval(const std::vector<Int>& x) const;
    MPoly partial(int var) const;
    // substitute x_i <- a_i + s*x_i for every variable simultaneously
    MPoly shift_scale(const std::vector<Int>& a, const Int& s) const;
    // divide all coefficients by c (must be exact)
    MPoly divide_exact(const Int& c) const;
    Int content() const;
    bool is_zero() const { return terms.empty(); }
    // the polynomial as univariate in `var` with the others substituted
    ZPoly univariate_in(int var, const std::vector<Int>& fixed) const;
    int degree_in(int var) const;
};

}  // namespace hasselab
