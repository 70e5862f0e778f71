#include "hasselab/models.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace hasselab {

const int kTernaryMonomials[10][3] = {
    {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
    {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3},
};

const int kQuadricIndex[10][2] = {
    {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3},
};

GenusOneModel::GenusOneModel(ModelKind k, std::vector<Int> c) : kind(k), coeffs(std::move(c)) {
    if ((int)coeffs.size() != kind.coeff_count())
        throw std::invalid_argument("coefficient vector length does not match the model kind");
}

std::string GenusOneModel::serialize() const {
    std::ostringstream os;
    os << kind.n << ";";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) os << ",";
        os << coeffs[i].get_str();
    }
    return os.str();
}

GenusOneModel GenusOneModel::parse(const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("model text must look like 'n;c1,...,cm'");
    int n = std::stoi(text.substr(0, semi));
    ModelKind kind = ModelKind::of(n);
    std::vector<Int> cs;
    std::string rest = text.substr(semi + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        auto comma = rest.find(',', pos);
        std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw std::invalid_argument("empty coefficient in model text");
        cs.push_back(int_from_string(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return GenusOneModel(kind, std::move(cs));
}

GenusOneModel GenusOneModel::scaled(const Int& lambda) const {
    std::vector<Int> c = coeffs;
    for (auto& x : c) x *= lambda;
    return GenusOneModel(kind, std::move(c));
}

bool GenusOneModel::is_zero() const {
    for (const auto& c : coeffs)
        if (c != 0) return false;
    return true;
}

bool ProjectivePoint::is_zero_vector() const {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

void ProjectivePoint::normalize(ModelKind kind) {
    if (is_zero_vector()) throw std::invalid_argument("cannot normalize the zero vector");
    if (kind.n == 2) {
        Int g = gcd(coords[0], coords[1]);
        if (g == 0) {
            // x = y = 0 is not a point of the weighted space
            throw std::invalid_argument("weighted point needs (x,y) != (0,0)");
        }
        coords[0] /= g;
        coords[1] /= g;
        Int g2 = g * g;
        if (coords[2] % g2 != 0) throw std::invalid_argument("z does not rescale integrally");
        coords[2] /= g2;
        if (coords[0] < 0 || (coords[0] == 0 && coords[1] < 0)) {
            coords[0] = -coords[0];
            coords[1] = -coords[1];
        }
        return;
    }
    Int g(0);
    for (const auto& c : coords) g = gcd(g, c);
    for (auto& c : coords) c /= g;
    for (const auto& c : coords) {
        if (c == 0) continue;
        if (c < 0)
            for (auto& x : coords) x = -x;
        break;
    }
}

std::string ProjectivePoint::str() const {
    std::string s;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ":";
        s += coords[i].get_str();
    }
    return s;
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::mul(const RatMat& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix shape mismatch");
    RatMat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

RatMat RatMat::transpose() const {
    RatMat r(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

Rat RatMat::det() const {
    if (rows != cols) throw std::invalid_argument("determinant of a non-square matrix");
    RatMat m = *this;
    Rat d(1);
    for (int k = 0; k < rows; ++k) {
        int piv = -1;
        for (int i = k; i < rows; ++i)
            if (m.at(i, k) != 0) { piv = i; break; }
        if (piv < 0) return Rat(0);
        if (piv != k) {
            for (int j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(k, j));
            d = -d;
        }
        d *= m.at(k, k);
        Rat inv = Rat(1) / m.at(k, k);
        for (int i = k + 1; i < rows; ++i) {
            Rat f = m.at(i, k) * inv;
            if (f == 0) continue;
            for (int j = k; j < cols; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return d;
}

TwistedTransform TwistedTransform::identity(ModelKind kind) {
    if (kind.n == 4) return pair(RatMat::identity(2), RatMat::identity(4));
    return linear(kind, RatMat::identity(kind.n));
}

TwistedTransform TwistedTransform::linear(ModelKind kind, RatMat g) {
    if (kind.n == 4) throw std::invalid_argument("pair transform required for n=4");
    if (g.rows != kind.n || g.cols != kind.n) throw std::invalid_argument("transform shape mismatch");
    TwistedTransform t{kind, std::move(g), {}, {}};
    if (!t.valid()) throw std::invalid_argument("transform must have nonzero determinant");
    return t;
}

TwistedTransform TwistedTransform::pair(RatMat g2, RatMat g4) {
    if (g2.rows != 2 || g2.cols != 2 || g4.rows != 4 || g4.cols != 4)
        throw std::invalid_argument("pair transform needs a 2x2 and a 4x4 matrix");
    TwistedTransform t{ModelKind::of(4), {}, std::move(g2), std::move(g4)};
    if (!t.valid()) throw std::invalid_argument("transform must have nonzero determinant");
    return t;
}

bool TwistedTransform::valid() const {
    if (kind.n == 4) return m2.det() != 0 && m4.det() != 0;
    return m.det() != 0;
}

TwistedTransform compose(const TwistedTransform& g2, const TwistedTransform& g1) {
    if (!(g2.kind == g1.kind)) throw std::invalid_argument("transform kinds differ");
    if (g1.kind.n == 4) {
        // the 4x4 part composes on the left, the pencil mixer on the right
        return TwistedTransform::pair(g1.m2.mul(g2.m2), g2.m4.mul(g1.m4));
    }
    TwistedTransform t{g1.kind, g2.m.mul(g1.m), {}, {}};
    return t;
}

GenusOneModel ActionResult::as_model() const {
    if (!integral) throw std::domain_error("action result is not integral");
    std::vector<Int> c;
    c.reserve(coeffs.size());
    for (const auto& r : coeffs) c.push_back(num(r));
    return GenusOneModel(kind, std::move(c));
}

std::vector<Int> evaluate(const GenusOneModel& model, const ProjectivePoint& point) {
    const auto& c = model.coeffs;
    if ((int)point.coords.size() != model.kind.point_dim())
        throw std::invalid_argument("point dimension does not match the model kind");
    if (model.kind.n == 2) {
        const Int &x = point.coords[0], &y = point.coords[1], &z = point.coords[2];
        Int f = c[0] * x * x * x * x + c[1] * x * x * x * y + c[2] * x * x * y * y +
                c[3] * x * y * y * y + c[4] * y * y * y * y;
        return {z * z - f};
    }
    if (model.kind.n == 3) {
        const Int &x = point.coords[0], &y = point.coords[1], &z = point.coords[2];
        Int f(0);
        for (int i = 0; i < 10; ++i) {
            Int t = c[i];
            for (int k = 0; k < kTernaryMonomials[i][0]; ++k) t *= x;
            for (int k = 0; k < kTernaryMonomials[i][1]; ++k) t *= y;
            for (int k = 0; k < kTernaryMonomials[i][2]; ++k) t *= z;
            f += t;
        }
        return {f};
    }
    auto quad = [&](int off) {
        Int q(0);
        for (int i = 0; i < 10; ++i)
            q += c[off + i] * point.coords[kQuadricIndex[i][0]] * point.coords[kQuadricIndex[i][1]];
        return q;
    };
    return {quad(0), quad(10)};
}

namespace {

// dense homogeneous forms over Rat for the substitution expansions
using RatForm2 = std::vector<Rat>;  // binary, c[i] ~ x^(d-i) y^i

RatForm2 lin2(const Rat& a, const Rat& b) { return {a, b}; }

RatForm2 mul2(const RatForm2& f, const RatForm2& g) {
    RatForm2 r(f.size() + g.size() - 1, Rat(0));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
    return r;
}

// dense ternary cubic over Rat indexed by the monomial table
struct RatCubic3 {
    std::array<Rat, 10> c{};
};

int ternary_index(int i, int j, int k) {
    for (int t = 0; t < 10; ++t)
        if (kTernaryMonomials[t][0] == i && kTernaryMonomials[t][1] == j && kTernaryMonomials[t][2] == k)
            return t;
    throw std::logic_error("bad ternary exponent");
}

}  // namespace

ActionResult act(const TwistedTransform& g, const GenusOneModel& model) {
    if (!(g.kind == model.kind)) throw std::invalid_argument("transform kind does not match the model");
    const auto& c = model.coeffs;

    std::vector<Rat> out;
    if (model.kind.n == 2) {
        // (x,y) . gamma = (x g11 + y g21, x g12 + y g22), then (det)^-2 twist
        RatForm2 L1 = lin2(g.m.at(0, 0), g.m.at(1, 0));
        RatForm2 L2 = lin2(g.m.at(0, 1), g.m.at(1, 1));
        std::vector<RatForm2> p1{{Rat(1)}}, p2{{Rat(1)}};
        for (int k = 1; k <= 4; ++k) {
            p1.push_back(mul2(p1.back(), L1));
            p2.push_back(mul2(p2.back(), L2));
        }
        RatForm2 acc(5, Rat(0));
        for (int i = 0; i <= 4; ++i) {
            // c[i] * L1^(4-i) * L2^i
            RatForm2 term = mul2(p1[4 - i], p2[i]);
            for (std::size_t k = 0; k < term.size(); ++k) acc[k] += Rat(c[i]) * term[k];
        }
        Rat d = g.m.det();
        Rat twist = Rat(1) / (d * d);
        out.assign(acc.begin(), acc.end());
        for (auto& v : out) v *= twist;
    } else if (model.kind.n == 3) {
        // linear images of x, y, z under the row-vector action
        std::array<std::array<Rat, 3>, 3> L;  // L[v] = image of variable v
        for (int v = 0; v < 3; ++v)
            for (int j = 0; j < 3; ++j) L[v][j] = g.m.at(v, j);
        RatCubic3 acc;
        for (int t = 0; t < 10; ++t) {
            if (c[t] == 0) continue;
            // expand prod over variables of (L[v])^{e_v}
            std::vector<std::array<Rat, 3>> factors;
            for (int v = 0; v < 3; ++v)
                for (int k = 0; k < kTernaryMonomials[t][v]; ++k) factors.push_back(L[v]);
            // multiply the three linear forms
            std::array<std::array<std::array<Rat, 4>, 4>, 4> dense{};  // exps up to 3
            dense[0][0][0] = Rat(c[t]);
            std::array<std::array<std::array<Rat, 4>, 4>, 4> next{};
            for (const auto& f : factors) {
                for (auto& plane : next)
                    for (auto& row : plane) row.fill(Rat(0));
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j)
                        for (int k = 0; k < 4; ++k) {
                            if (dense[i][j][k] == 0) continue;
                            if (f[0] != 0) next[i + 1][j][k] += dense[i][j][k] * f[0];
                            if (f[1] != 0) next[i][j + 1][k] += dense[i][j][k] * f[1];
                            if (f[2] != 0) next[i][j][k + 1] += dense[i][j][k] * f[2];
                        }
                dense = next;
            }
            for (int i = 0; i <= 3; ++i)
                for (int j = 0; j <= 3 - i; ++j) {
                    int k = 3 - i - j;
                    if (dense[i][j][k] != 0) acc.c[ternary_index(i, j, k)] += dense[i][j][k];
                }
        }
        Rat twist = Rat(1) / g.m.det();
        out.assign(acc.c.begin(), acc.c.end());
        for (auto& v : out) v *= twist;
    } else {
        // doubled Gram matrices, congruence by m4, then the pencil mix by m2
        auto gram = [&](int off) {
            RatMat M(4, 4);
            for (int i = 0; i < 10; ++i) {
                int a = kQuadricIndex[i][0], b = kQuadricIndex[i][1];
                if (a == b)
                    M.at(a, a) = Rat(2 * c[off + i]);
                else
                    M.at(a, b) = M.at(b, a) = Rat(c[off + i]);
            }
            return M;
        };
        RatMat MQ = g.m4.mul(gram(0)).mul(g.m4.transpose());
        RatMat MR = g.m4.mul(gram(10)).mul(g.m4.transpose());
        const Rat &r = g.m2.at(0, 0), &s = g.m2.at(0, 1), &u = g.m2.at(1, 0), &w = g.m2.at(1, 1);
        auto mix = [&](const Rat& f1, const Rat& f2) {
            // (Q, Q') -> (r Q + u Q', s Q + w Q')
            return std::pair<Rat, Rat>(f1 * r + f2 * u, f1 * s + f2 * w);
        };
        out.assign(20, Rat(0));
        for (int i = 0; i < 10; ++i) {
            int a = kQuadricIndex[i][0], b = kQuadricIndex[i][1];
            Rat q1 = (a == b) ? MQ.at(a, a) / 2 : MQ.at(a, b);
            Rat q2 = (a == b) ? MR.at(a, a) / 2 : MR.at(a, b);
            auto [n1, n2] = mix(q1, q2);
            out[i] = n1;
            out[10 + i] = n2;
        }
    }

    bool integral = true;
    for (const auto& v : out)
        if (!is_integral(v)) { integral = false; break; }
    return ActionResult{model.kind, std::move(out), integral};
}

std::vector<std::vector<Int>> doubled_gram(const std::vector<Int>& q10) {
    std::vector<std::vector<Int>> M(4, std::vector<Int>(4, Int(0)));
    for (int i = 0; i < 10; ++i) {
        int a = kQuadricIndex[i][0], b = kQuadricIndex[i][1];
        if (a == b)
            M[a][a] = 2 * q10[i];
        else
            M[a][b] = M[b][a] = q10[i];
    }
    return M;
}

GenusOneModel resolvent_quartic(const GenusOneModel& model) {
    if (model.kind.n != 4) throw std::invalid_argument("resolvent quartic needs a quadric pair");
    auto M1 = doubled_gram({model.coeffs.begin(), model.coeffs.begin() + 10});
    auto M2 = doubled_gram({model.coeffs.begin() + 10, model.coeffs.end()});
    // det(x M1 + y M2) at (x, y) = (k, 1), k = 0..4, then interpolate
    std::vector<Int> vals;
    for (int k = 0; k <= 4; ++k) {
        std::vector<std::vector<Int>> M(4, std::vector<Int>(4));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) M[i][j] = Int(k) * M1[i][j] + M2[i][j];
        vals.push_back(int_det(M));
    }
    ZPoly u = interpolate_at_small_points(vals);
    u.resize(5, Int(0));
    // R(x,y) = sum u[j] x^j y^(4-j); binary quartic coefficients (a,b,c,d,e)
    return GenusOneModel(ModelKind::of(2), {u[4], u[3], u[2], u[1], u[0]});
}

GenusOneModel hessian(const GenusOneModel& model) {
    if (model.kind.n != 3) throw std::invalid_argument("hessian needs a ternary cubic");
    // second partials are integer linear forms; H[i][j][v] = coeff of var v
    Int H[3][3][3];
    for (auto& plane : H)
        for (auto& row : plane)
            for (auto& x : row) x = 0;
    for (int t = 0; t < 10; ++t) {
        const Int& c = model.coeffs[t];
        if (c == 0) continue;
        int e[3] = {kTernaryMonomials[t][0], kTernaryMonomials[t][1], kTernaryMonomials[t][2]};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int e2[3] = {e[0], e[1], e[2]};
                long mult = e2[i];
                if (mult == 0) continue;
                e2[i] -= 1;
                mult *= e2[j];
                if (mult == 0) continue;
                e2[j] -= 1;
                for (int v = 0; v < 3; ++v)
                    if (e2[v] == 1) H[i][j][v] += mult * c;
            }
    }
    // 3x3 determinant of linear forms, expanded by permutations
    static const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
    static const int sign[6] = {1, 1, 1, -1, -1, -1};
    std::array<Int, 10> acc{};
    for (int pi = 0; pi < 6; ++pi) {
        const int* p = perm[pi];
        for (int v0 = 0; v0 < 3; ++v0)
            for (int v1 = 0; v1 < 3; ++v1)
                for (int v2 = 0; v2 < 3; ++v2) {
                    Int term = H[0][p[0]][v0] * H[1][p[1]][v1] * H[2][p[2]][v2];
                    if (term == 0) continue;
                    int e[3] = {0, 0, 0};
                    e[v0]++; e[v1]++; e[v2]++;
                    acc[ternary_index(e[0], e[1], e[2])] += sign[pi] * term;
                }
    }
    std::vector<Int> out(acc.begin(), acc.end());
    for (auto& v : out) {
        if (v % 2 != 0) throw std::logic_error("hessian determinant content violated");
        v /= 2;
    }
    return GenusOneModel(ModelKind::of(3), std::move(out));
}

Box Box::symmetric_unit(ModelKind kind) {
    Box b;
    b.intervals.assign(kind.coeff_count(), {Rat(-1), Rat(1)});
    return b;
}

GenusOneModel sample_box(ModelKind kind, const Box& box, const Int& t, RngStream& rng) {
    if ((int)box.intervals.size() != kind.coeff_count())
        throw std::invalid_argument("box dimension does not match the model kind");
    if (t <= 0) throw std::invalid_argument("box scale must be positive");
    std::vector<Int> c;
    c.reserve(box.intervals.size());
    for (const auto& [lo, hi] : box.intervals) {
        if (sgn(lo) > 0 || sgn(hi) < 0)
            throw std::invalid_argument("box interval must contain 0 in its closure");
        Int a = ceil_to_int(Rat(t) * lo);
        Int b = floor_to_int(Rat(t) * hi);
        if (a > b) throw std::invalid_argument("empty integer range in a box coordinate");
        c.push_back(rng.uniform_int(a, b));
    }
    return GenusOneModel(kind, std::move(c));
}

}  // namespace hasselab
