#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hasselab/integer.hpp"
#include "hasselab/polys.hpp"
#include "hasselab/rng.hpp"

namespace hasselab {

// Degree-n genus one models, n in {2,3,4}:
//   n=2: binary quartic (a,b,c,d,e), model z^2 = f(x,y), m=5
//   n=3: ternary cubic, 10 coefficients, m=10
//   n=4: pair of quaternary quadratic forms, 2 x 10 coefficients, m=20
//
// Ternary cubic monomial order (lex descending on exponent triples):
//   x^3, x^2 y, x^2 z, x y^2, x y z, x z^2, y^3, y^2 z, y z^2, z^3
// Quadric coefficient order (upper triangle, row-major):
//   c11, c12, c13, c14, c22, c23, c24, c33, c34, c44
struct ModelKind {
    int n = 3;

    static ModelKind of(int n_) {
        if (n_ != 2 && n_ != 3 && n_ != 4) throw std::invalid_argument("model degree must be 2, 3, or 4");
        return ModelKind{n_};
    }
    int coeff_count() const { return n == 2 ? 5 : (n == 3 ? 10 : 20); }
    int disc_degree() const { return 6 * coeff_count() / 5; }
    int point_dim() const { return n == 4 ? 4 : 3; }
    bool operator==(const ModelKind& o) const { return n == o.n; }
};

extern const int kTernaryMonomials[10][3];
extern const int kQuadricIndex[10][2];

struct GenusOneModel {
    ModelKind kind;
    std::vector<Int> coeffs;

    GenusOneModel() : kind(ModelKind::of(3)), coeffs(10, Int(0)) {}
    GenusOneModel(ModelKind k, std::vector<Int> c);

    std::string serialize() const;                       // "n;c1,...,cm"
    static GenusOneModel parse(const std::string& text);
    GenusOneModel scaled(const Int& lambda) const;       // lambda * coefficients
    bool is_zero() const;
};

struct ProjectivePoint {
    std::vector<Int> coords;

    ProjectivePoint() = default;
    explicit ProjectivePoint(std::vector<Int> c) : coords(std::move(c)) {}
    bool is_zero_vector() const;
    // gcd-reduce and fix the sign of the first nonzero coordinate.
    // For the weighted (1,1,2) space of binary quartic models only gcd(x,y)
    // is cleared and z is rescaled by its square.
    void normalize(ModelKind kind);
    std::string str() const;  // "x:y:z"
};

struct RatMat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(r * c, Rat(0)) {}
    Rat& at(int i, int j) { return a[i * cols + j]; }
    const Rat& at(int i, int j) const { return a[i * cols + j]; }
    static RatMat identity(int n);
    RatMat mul(const RatMat& other) const;
    RatMat transpose() const;
    Rat det() const;  // for n <= 4
};

struct TwistedTransform {
    ModelKind kind;
    RatMat m;   // n=2: 2x2, n=3: 3x3; unused for n=4
    RatMat m2;  // n=4: the 2x2 pencil mixer
    RatMat m4;  // n=4: the 4x4 coordinate change

    static TwistedTransform identity(ModelKind kind);
    static TwistedTransform linear(ModelKind kind, RatMat g);        // n = 2 or 3
    static TwistedTransform pair(RatMat g2, RatMat g4);              // n = 4
    bool valid() const;  // nonzero determinant(s)
};

// acting by g2 after g1 equals acting by compose(g2, g1)
TwistedTransform compose(const TwistedTransform& g2, const TwistedTransform& g1);

struct ActionResult {
    ModelKind kind;
    std::vector<Rat> coeffs;
    bool integral;

    GenusOneModel as_model() const;  // throws when not integral
};

// one value for n=2 (z^2 - f) and n=3 (f); two values (Q, Q') for n=4
std::vector<Int> evaluate(const GenusOneModel& model, const ProjectivePoint& point);

ActionResult act(const TwistedTransform& g, const GenusOneModel& model);

GenusOneModel resolvent_quartic(const GenusOneModel& model);  // n=4 -> n=2
GenusOneModel hessian(const GenusOneModel& model);            // n=3 -> n=3

bool is_generic(const GenusOneModel& model);
// the flex point found by the n=3 genericity test, when one exists
std::optional<ProjectivePoint> rational_flex(const GenusOneModel& model);

struct Box {
    std::vector<std::pair<Rat, Rat>> intervals;
    static Box symmetric_unit(ModelKind kind);  // [-1,1]^m
};

GenusOneModel sample_box(ModelKind kind, const Box& box, const Int& t, RngStream& rng);

// doubled Gram matrix of one quadric: diagonal 2*c_ii, off-diagonal c_ij
std::vector<std::vector<Int>> doubled_gram(const std::vector<Int>& q10);

}  // namespace hasselab
