#pragma once

// Finite commutative algebras M[x]/(f) built by base change from a simple
// extension L = K[x]/(f) to a larger field M (a splitting field for f when
// none is supplied).  The algebra's nilradical, its primitive idempotents,
// and unit-times-idempotent decompositions are computed by linear algebra
// and CRT data; the top-level check compares those structure facts against
// an expected separability verdict for the original extension.

#include <functional>
#include <random>

#include "composita/classify.hpp"
#include "composita/composite.hpp"

namespace composita {

/// A finite-dimensional commutative algebra over M, given by structure
/// constants.  Commutativity, associativity, and the identity are validated
/// on every basis triple at construction.
struct FiniteCommAlgebra {
    Field M;
    std::size_t dim = 0;
    std::vector<std::vector<Value>> table; // table[i*dim+j] = coords of b_i * b_j
    std::vector<Value> one;                // coordinates of 1

    const std::vector<Value>& entry(std::size_t i, std::size_t j) const {
        return table[i * dim + j];
    }
};

using AlgElem = std::vector<Value>; // coordinates over M

inline AlgElem alg_zero(const FiniteCommAlgebra& A) {
    return AlgElem(A.dim, A.M.zero());
}

inline bool alg_is_zero(const FiniteCommAlgebra& A, const AlgElem& a) {
    for (const auto& c : a)
        if (!A.M.is_zero(c)) return false;
    return true;
}

inline AlgElem alg_add(const FiniteCommAlgebra& A, const AlgElem& a, const AlgElem& b) {
    AlgElem r = a;
    for (std::size_t i = 0; i < A.dim; ++i) r[i] = A.M.add(r[i], b[i]);
    return r;
}

inline AlgElem alg_sub(const FiniteCommAlgebra& A, const AlgElem& a, const AlgElem& b) {
    AlgElem r = a;
    for (std::size_t i = 0; i < A.dim; ++i) r[i] = A.M.sub(r[i], b[i]);
    return r;
}

inline AlgElem alg_scale(const FiniteCommAlgebra& A, const Value& c, const AlgElem& a) {
    AlgElem r = a;
    for (auto& x : r) x = A.M.mul(c, x);
    return r;
}

inline AlgElem alg_mul(const FiniteCommAlgebra& A, const AlgElem& a, const AlgElem& b) {
    AlgElem r = alg_zero(A);
    for (std::size_t i = 0; i < A.dim; ++i) {
        if (A.M.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < A.dim; ++j) {
            if (A.M.is_zero(b[j])) continue;
            Value c = A.M.mul(a[i], b[j]);
            const auto& t = A.entry(i, j);
            for (std::size_t m = 0; m < A.dim; ++m)
                r[m] = A.M.add(r[m], A.M.mul(c, t[m]));
        }
    }
    return r;
}

/// Matrix of the multiplication operator y -> a*y.
inline Mat alg_op(const FiniteCommAlgebra& A, const AlgElem& a) {
    std::vector<std::vector<Value>> cols;
    for (std::size_t j = 0; j < A.dim; ++j) {
        AlgElem ej = alg_zero(A);
        ej[j] = A.M.one();
        cols.push_back(alg_mul(A, a, ej));
    }
    return Mat::from_columns(A.M, cols);
}

inline FiniteCommAlgebra make_algebra(const Field& M, std::size_t dim,
                                      std::vector<std::vector<Value>> table,
                                      std::vector<Value> one) {
    FiniteCommAlgebra A{M, dim, std::move(table), std::move(one)};
    if (A.table.size() != dim * dim) throw construction_error("structure table has wrong size");
    for (const auto& row : A.table)
        if (row.size() != dim) throw construction_error("structure row has wrong size");
    if (A.one.size() != dim) throw construction_error("identity vector has wrong size");
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t m = 0; m < dim; ++m)
                if (!M.eq(A.entry(i, j)[m], A.entry(j, i)[m]))
                    throw construction_error("structure constants are not commutative");
    // associativity on all basis triples, and 1*b_i = b_i
    auto basis = [&](std::size_t i) {
        AlgElem e = alg_zero(A);
        e[i] = M.one();
        return e;
    };
    for (std::size_t i = 0; i < dim; ++i) {
        AlgElem bi = basis(i);
        AlgElem li = alg_mul(A, A.one, bi);
        for (std::size_t m = 0; m < dim; ++m)
            if (!M.eq(li[m], bi[m])) throw construction_error("identity fails on a basis element");
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t m2 = 0; m2 < dim; ++m2) {
                AlgElem lhs = alg_mul(A, alg_mul(A, bi, basis(j)), basis(m2));
                AlgElem rhs = alg_mul(A, bi, alg_mul(A, basis(j), basis(m2)));
                for (std::size_t t = 0; t < dim; ++t)
                    if (!M.eq(lhs[t], rhs[t]))
                        throw construction_error("structure constants are not associative");
            }
    }
    return A;
}

/// The base-changed algebra M tensor_K L for L = K[x]/(f), as M[x]/(f) with
/// the factorization of f over M kept alongside.
struct TensorAlgebra {
    FiniteCommAlgebra A;
    Field M;
    Field K;
    Poly f_over_K;
    Poly f_over_M;
    FactorList factors; // of f over M
    std::string note;   // records how M was chosen
};

namespace detail {

inline FiniteCommAlgebra quotient_algebra(const Poly& f) {
    const Field& M = f.k;
    std::size_t n = std::size_t(f.deg());
    std::vector<std::vector<Value>> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Poly prod = poly_mod(Poly::monomial(M, M.one(), i + j), f);
            std::vector<Value> row(n, M.zero());
            for (std::size_t m = 0; m < n && int(m) <= prod.deg(); ++m) row[m] = prod.at(m);
            table[i * n + j] = std::move(row);
        }
    std::vector<Value> one(n, M.zero());
    one[0] = M.one();
    return make_algebra(M, n, std::move(table), std::move(one));
}

inline Poly simple_defining_poly(const Extension& E) {
    if (!E.degree) throw capability_error("base change needs a finite extension");
    if (*E.degree == 1)
        return Poly(E.lower, {E.lower.neg(E.lower.one()), E.lower.one()}); // x - 1
    auto fl = flatten_tower(E.upper, E.lower);
    return fl.g;
}

} // namespace detail

/// Base change along a supplied big field M containing K.
inline TensorAlgebra tensor_algebra(const Extension& E, const Field& M, std::string note) {
    Poly f = detail::simple_defining_poly(E);
    M.require_prefix(E.lower);
    Poly fM = lift_poly(f, M);
    FactorList fac = factor_over_extension(f, M);
    TensorAlgebra T{detail::quotient_algebra(fM), M, E.lower, f, fM, std::move(fac), std::move(note)};
    return T;
}

/// Base change along a splitting field of the defining polynomial, built
/// here; the choice is recorded in the note on every report.
inline TensorAlgebra tensor_algebra(const Extension& E) {
    Poly f = detail::simple_defining_poly(E);
    Field M = splitting_field(f, E.lower);
    return tensor_algebra(E, M, "M = splitting field surrogate");
}

// ---------------------------------------------------------------------------
// Nilradical.

namespace detail {

/// Matrix whose kernel is exactly span(B): a basis of the left null space of
/// the column span of B.  Empty B gives the identity.
inline Mat complement_projector(const Field& M, std::size_t n,
                                const std::vector<AlgElem>& B) {
    if (B.empty()) return Mat::identity(M, n);
    Mat cols = Mat::from_columns(M, B);
    // left null space = kernel of the transpose
    Mat tr(M, cols.cols, cols.rows);
    for (std::size_t i = 0; i < cols.rows; ++i)
        for (std::size_t j = 0; j < cols.cols; ++j) tr.at(j, i) = cols.at(i, j);
    auto rows = mat_kernel(tr);
    Mat P(M, rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) P.at(i, j) = rows[i][j];
    return P;
}

inline bool is_root_of_t_level(const Field& M) {
    std::uint32_t p = M.characteristic();
    if (M.base() != BaseKind::RationalFunctions || M.levels_used() != 1) return false;
    const auto& mod = M.level_modulus();
    if (mod.size() != p + 1) return false;
    Field base = M.base_field();
    for (std::size_t i = 1; i < p; ++i)
        if (!base.is_zero(mod[i])) return false;
    return base.eq(mod[0], base.neg(base.t_generator()));
}

/// Decompose z = sum_e comp[e] * tau^e with every comp[e] in the subfield of
/// p-th powers.  Supported shapes: F_p(t) itself (tau = t) and the x^p - t
/// level over it (tau = the generator).  Unsupported shapes give nothing.
inline std::optional<std::vector<Value>> frobenius_components(const Field& M, const Value& z) {
    std::uint32_t p = M.characteristic();
    if (M.base() != BaseKind::RationalFunctions) return std::nullopt;
    if (M.is_base()) {
        const auto& c = std::get<TRat>(z.rep);
        TVec den_pm1{1};
        for (std::uint32_t i = 0; i + 1 < p; ++i) den_pm1 = tv_mul(den_pm1, c.den, p);
        TVec den_p = tv_mul(den_pm1, c.den, p);
        TVec N = tv_mul(c.num, den_pm1, p);
        std::vector<Value> comps(p, M.zero());
        for (std::uint32_t e = 0; e < p; ++e) {
            TVec Ne;
            for (std::size_t idx = e; idx < N.size(); idx += p) {
                if (N[idx] == 0) continue;
                std::size_t pos = idx - e; // multiple of p by construction
                if (Ne.size() <= pos) Ne.resize(pos + 1, 0);
                Ne[pos] = N[idx];
            }
            tv_trim(Ne);
            comps[e] = Value(tr_make(p, std::move(Ne), den_p));
        }
        return comps;
    }
    if (is_root_of_t_level(M)) {
        Field base = M.base_field();
        std::vector<Value> comps;
        auto coords = M.flatten(z, base);
        for (auto& c : coords) comps.push_back(M.lift_from(base, c));
        return comps;
    }
    return std::nullopt;
}

} // namespace detail

/// Basis of the nilradical.  Characteristic 0: kernel of the trace bilinear
/// form.  Characteristic p: iterate N_{j+1} = { a : a^p in N_j }, a Frobenius
/// kernel computation; each step solves a linear system in the p-th powers of
/// the coordinates and extracts p-th roots of the solution basis.
inline std::vector<AlgElem> nilradical(const FiniteCommAlgebra& A) {
    const Field& M = A.M;
    std::size_t n = A.dim;
    std::uint32_t p = M.characteristic();
    if (p == 0) {
        Mat gram(M, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            AlgElem ei = alg_zero(A);
            ei[i] = M.one();
            for (std::size_t j = 0; j <= i; ++j) {
                AlgElem ej = alg_zero(A);
                ej[j] = M.one();
                Mat op = alg_op(A, alg_mul(A, ei, ej));
                Value tr = M.zero();
                for (std::size_t d = 0; d < n; ++d) tr = M.add(tr, op.at(d, d));
                gram.at(i, j) = tr;
                gram.at(j, i) = std::move(tr);
            }
        }
        return mat_kernel(gram);
    }

    // coordinates of b_i^p, shared by every iteration
    std::vector<AlgElem> frob_cols;
    for (std::size_t i = 0; i < n; ++i) {
        AlgElem e = alg_zero(A);
        e[i] = M.one();
        AlgElem acc = e;
        for (std::uint32_t q = 1; q < p; ++q) acc = alg_mul(A, acc, e);
        frob_cols.push_back(std::move(acc));
    }
    Mat C = Mat::from_columns(M, frob_cols);

    std::vector<AlgElem> N; // current basis
    BigInt reach = 1;
    for (;;) {
        Mat P = detail::complement_projector(M, n, N);
        Mat PC = mat_mul(P, C);
        auto plain = mat_kernel(PC);
        std::vector<AlgElem> next;
        if (plain.empty()) {
            next = {};
        } else if (is_perfect(M)) {
            // Frobenius is onto: root the solution basis coordinatewise
            for (const auto& u : plain) {
                AlgElem x(n, M.zero());
                for (std::size_t i = 0; i < n; ++i) {
                    auto r = p_th_root(M, u[i]);
                    if (!r) throw internal_error("perfect field refused a p-th root");
                    x[i] = *r;
                }
                next.push_back(std::move(x));
            }
        } else {
            // imperfect: solve with the unknowns confined to p-th powers by
            // splitting every equation over a basis of M over M^p
            std::vector<std::vector<Value>> split_rows;
            for (std::size_t r = 0; r < PC.rows; ++r) {
                std::vector<std::vector<Value>> comp(n);
                std::size_t parts = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    auto c = detail::frobenius_components(M, PC.at(r, i));
                    if (!c)
                        throw capability_error(
                            "nilradical over this coefficient field shape is not supported");
                    parts = c->size();
                    comp[i] = std::move(*c);
                }
                for (std::size_t e = 0; e < parts; ++e) {
                    std::vector<Value> row(n, M.zero());
                    for (std::size_t i = 0; i < n; ++i) row[i] = comp[i][e];
                    split_rows.push_back(std::move(row));
                }
            }
            // entries lie in M^p, so elimination stays there and the kernel
            // basis has coordinates with p-th roots in M
            auto vs = mat_kernel(Mat::from_rows(M, split_rows));
            for (const auto& u : vs) {
                AlgElem x(n, M.zero());
                for (std::size_t i = 0; i < n; ++i) {
                    auto r = p_th_root(M, u[i]);
                    if (!r) throw internal_error("kernel basis entry lost its p-th root");
                    x[i] = *r;
                }
                next.push_back(std::move(x));
            }
        }
        bool grew = next.size() > N.size();
        N = std::move(next);
        reach *= p;
        if (!grew || reach >= BigInt(std::uint64_t(n))) break;
    }
    return N;
}

// ---------------------------------------------------------------------------
// Idempotents.

/// Primitive orthogonal idempotents of M[x]/(f), one per distinct irreducible
/// factor of f, via CRT interpolants.  Checked to be idempotent, pairwise
/// orthogonal, and to sum to 1.
inline std::vector<AlgElem> idempotents(const TensorAlgebra& T) {
    const Field& M = T.M;
    const Poly& f = T.f_over_M;
    std::size_t n = T.A.dim;
    auto to_elem = [&](const Poly& g) {
        AlgElem e(n, M.zero());
        for (std::size_t i = 0; i < n && int(i) <= g.deg(); ++i) e[i] = g.at(i);
        return e;
    };
    std::vector<AlgElem> out;
    if (T.factors.size() == 1) {
        out.push_back(to_elem(Poly::one(M)));
        return out;
    }
    for (const auto& [q, m] : T.factors) {
        Poly F = q;
        for (std::size_t i = 1; i < m; ++i) F = F * q;
        Poly G = poly_div_exact(f, F);
        auto [g, s, t] = poly_ext_gcd(G, F);
        if (g.deg() != 0) throw internal_error("CRT blocks are not coprime");
        Value inv = M.inv(g.at(0));
        Poly e = poly_mod(s * Poly::constant(M, inv) * G, f);
        out.push_back(to_elem(e));
    }
    // validate: idempotent, orthogonal, summing to 1
    AlgElem sum = alg_zero(T.A);
    for (std::size_t i = 0; i < out.size(); ++i) {
        AlgElem sq = alg_mul(T.A, out[i], out[i]);
        if (!(sq == out[i])) throw internal_error("CRT interpolant is not idempotent");
        for (std::size_t j = 0; j < i; ++j)
            if (!alg_is_zero(T.A, alg_mul(T.A, out[i], out[j])))
                throw internal_error("CRT idempotents are not orthogonal");
        sum = alg_add(T.A, sum, out[i]);
    }
    if (!(sum == T.A.one)) throw internal_error("CRT idempotents do not sum to 1");
    return out;
}

// ---------------------------------------------------------------------------
// Unit-times-idempotent decomposition.

struct UnitIdem {
    bool exists = false;
    AlgElem unit, idem; // a = unit * idem when exists
};

namespace detail {

/// Block verdicts for a against the CRT decomposition: for each factor q^m
/// of f, the component a mod q^m is zero (0), a unit in its local block (+1),
/// or a nonzero non-unit (-1: divisible by q but not zero).
inline std::vector<int> block_verdicts(const TensorAlgebra& T, const AlgElem& a) {
    Poly pa(T.M, a);
    std::vector<int> out;
    for (const auto& [q, m] : T.factors) {
        Poly F = q;
        for (std::size_t i = 1; i < m; ++i) F = F * q;
        Poly comp = poly_mod(pa, F);
        if (comp.is_zero())
            out.push_back(0);
        else if (poly_mod(comp, q).is_zero())
            out.push_back(-1);
        else
            out.push_back(+1);
    }
    return out;
}

} // namespace detail

/// Fast decision: a = unit * idempotent exactly when no CRT block component
/// is a nonzero non-unit.
inline bool splits_as_unit_idem(const TensorAlgebra& T, const AlgElem& a) {
    for (int v : detail::block_verdicts(T, a))
        if (v < 0) return false;
    return true;
}

/// Decide whether a = u*e with u a unit and e idempotent, by projecting onto
/// each CRT block: the block component must be zero or invertible inside its
/// block.  A nonzero non-unit component means no decomposition exists.  On
/// success u = a + (idempotents of the dead blocks), e = sum of idempotents
/// of the live blocks, and the product is replayed exactly.
inline UnitIdem unit_times_idempotent(const TensorAlgebra& T,
                                      const std::vector<AlgElem>& prim,
                                      const AlgElem& a) {
    const FiniteCommAlgebra& A = T.A;
    UnitIdem r;
    auto verdicts = detail::block_verdicts(T, a);
    if (verdicts.size() != prim.size()) throw internal_error("block/idempotent misalignment");
    AlgElem unit = a, idem = alg_zero(A);
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        if (verdicts[i] < 0) return r; // nonzero non-unit block component
        if (verdicts[i] == 0)
            unit = alg_add(A, unit, prim[i]); // fill the unit on dead blocks
        else
            idem = alg_add(A, idem, prim[i]);
    }
    // replay: unit must be globally invertible and a = unit * idem
    if (!mat_solve(alg_op(A, unit), A.one)) throw internal_error("assembled unit is singular");
    if (!(alg_mul(A, unit, idem) == a)) throw internal_error("unit*idempotent replay mismatch");
    r.exists = true;
    r.unit = std::move(unit);
    r.idem = std::move(idem);
    return r;
}

// ---------------------------------------------------------------------------
// The separability diagnostic.

struct TensorReport {
    bool expected_separable = false;
    std::size_t algebra_dim = 0;
    std::size_t nilradical_dim = 0;
    std::size_t idempotent_count = 0;
    bool nilradical_zero = false;   // no nonzero nilpotents in M tensor L
    bool all_unit_idem = false;     // every tested element splits as unit*idempotent
    bool idempotents_span = false;  // the primitive idempotents span the algebra
    std::string element_mode;       // "exhaustive" or "sampled"
    std::size_t elements_tested = 0;
    std::string note;               // how M was chosen
};

namespace detail {

/// Elements to push through the unit*idempotent decision: all of A when the
/// total size is small, otherwise structured probes (basis vectors, the
/// nilradical, shifted nilpotents) topped up with seeded random samples.
inline std::vector<AlgElem> element_pool(const FiniteCommAlgebra& A,
                                         const std::vector<AlgElem>& nil,
                                         std::uint64_t seed, bool& exhaustive,
                                         std::size_t sample_budget = 1000) {
    const Field& M = A.M;
    std::vector<AlgElem> pool;
    if (auto sz = M.size()) {
        BigInt total = 1;
        bool small = true;
        for (std::size_t i = 0; i < A.dim && small; ++i) {
            total *= *sz;
            if (total > 65536) small = false;
        }
        if (small) {
            exhaustive = true;
            BigInt count = total;
            for (BigInt idx = 0; idx < count; ++idx) {
                BigInt rest = idx;
                AlgElem a(A.dim, M.zero());
                for (std::size_t i = 0; i < A.dim; ++i) {
                    a[i] = M.element_by_index(rest % *sz);
                    rest /= *sz;
                }
                pool.push_back(std::move(a));
            }
            return pool;
        }
    }
    exhaustive = false;
    pool.push_back(alg_zero(A));
    pool.push_back(A.one);
    for (std::size_t i = 0; i < A.dim; ++i) {
        AlgElem e = alg_zero(A);
        e[i] = M.one();
        pool.push_back(e);
    }
    for (const auto& v : nil) {
        pool.push_back(v);
        pool.push_back(alg_add(A, v, A.one)); // unit + nilpotent: still no split unless v = 0
        for (std::size_t i = 0; i < A.dim; ++i) {
            AlgElem e = alg_zero(A);
            e[i] = M.one();
            pool.push_back(alg_add(A, v, e));
        }
    }
    std::mt19937_64 rng(seed ^ 0xA16EB8A5ULL);
    auto coords = sample_values(M, A.dim * sample_budget, rng());
    for (std::size_t s = 0; s + 1 < sample_budget; ++s) {
        AlgElem a(A.dim, M.zero());
        for (std::size_t i = 0; i < A.dim; ++i) a[i] = coords[s * A.dim + i];
        pool.push_back(std::move(a));
    }
    return pool;
}

} // namespace detail

/// Build the base-changed algebra and measure its structure: nilradical,
/// primitive idempotents, and the unit*idempotent sweep.  Makes no claim
/// about separability; callers compare the facts themselves.
inline TensorReport tensor_structure(const Extension& E, std::uint64_t seed = 0) {
    TensorAlgebra T = tensor_algebra(E);
    TensorReport r;
    r.algebra_dim = T.A.dim;
    r.note = T.note;

    auto nil = nilradical(T.A);
    r.nilradical_dim = nil.size();
    r.nilradical_zero = nil.empty();

    // cross-check against the stored factorization of f over M
    std::size_t expect_nil = 0;
    for (const auto& [q, m] : T.factors) expect_nil += (m - 1) * std::size_t(q.deg());
    if (expect_nil != r.nilradical_dim)
        throw internal_error("nilradical dimension disagrees with the factorization");

    auto prim = idempotents(T);
    r.idempotent_count = prim.size();
    r.idempotents_span = prim.size() == T.A.dim;

    bool exhaustive = false;
    auto pool = detail::element_pool(T.A, nil, seed, exhaustive);
    r.element_mode = exhaustive ? "exhaustive" : "sampled";
    r.elements_tested = pool.size();
    r.all_unit_idem = true;
    for (const auto& a : pool) {
        if (!splits_as_unit_idem(T, a)) {
            r.all_unit_idem = false;
            break;
        }
    }
    return r;
}

/// Compare the measured structure against an expected separability verdict:
/// trivial nilradical, unit*idempotent decompositions, and idempotents
/// spanning must all equal the verdict.  Disagreement is an internal error
/// by design — it means a bug, not an open question.
inline TensorReport tensor_check(const Extension& E, bool expected_separable,
                                 std::uint64_t seed = 0) {
    TensorReport r = tensor_structure(E, seed);
    r.expected_separable = expected_separable;
    if (r.nilradical_zero != expected_separable ||
        r.all_unit_idem != expected_separable ||
        r.idempotents_span != expected_separable)
        throw internal_error("structure facts disagree with the separability verdict");
    return r;
}

} // namespace composita
