#include "transvection.hpp"

namespace pkv {

namespace {

std::vector<GaussianRational> flatten(const ExactMatrix& m) {
    std::vector<GaussianRational> v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
    return v;
}

TransvectionAlgebra::SparseVec sparsify(const std::vector<GaussianRational>& v) {
    TransvectionAlgebra::SparseVec s;
    for (std::uint32_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) s.emplace_back(k, v[k]);
    return s;
}

}  // namespace

std::vector<GaussianRational> TransvectionAlgebra::ad(
    std::uint32_t a, const std::vector<GaussianRational>& v) const {
    std::vector<GaussianRational> out(dim());
    for (std::uint32_t b = 0; b < dim(); ++b) {
        if (v[b].is_zero()) continue;
        for (const auto& [k, c] : bracket(a, b)) out[k] += v[b] * c;
    }
    return out;
}

TransvectionAlgebra TransvectionAlgebra::build(const MetricModel& m, const TensorField& riem,
                                               const HolonomySpan& h) {
    if (!m.chart()->is_real())
        throw std::invalid_argument("transvection algebra works on real charts");
    const std::uint32_t d = m.dim();
    const std::size_t hd = h.basis.size();
    TransvectionAlgebra t;
    t.hol_dim_ = hd;
    t.m_dim_ = d;
    const std::size_t total = hd + d;
    t.table_.assign(total * total, {});

    // Solve matrix whose columns are the flattened hol basis elements.
    ExactMatrix span_cols(static_cast<std::size_t>(d) * d, hd);
    for (std::size_t j = 0; j < hd; ++j) {
        std::vector<GaussianRational> f = flatten(h.basis[j]);
        for (std::size_t r = 0; r < f.size(); ++r) span_cols.at(r, j) = f[r];
    }
    auto resolve_in_hol = [&](const ExactMatrix& mat) {
        ExactMatrix rhs(static_cast<std::size_t>(d) * d, 1);
        std::vector<GaussianRational> f = flatten(mat);
        for (std::size_t r = 0; r < f.size(); ++r) rhs.at(r, 0) = f[r];
        std::optional<ExactMatrix> sol = span_cols.solve(rhs);
        if (!sol)
            throw std::runtime_error(
                "curvature endomorphism lies outside the holonomy span");
        std::vector<GaussianRational> coeffs(hd);
        for (std::size_t j = 0; j < hd; ++j) coeffs[j] = sol->at(j, 0);
        // Exactness guard: the solve is over an overdetermined system.
        ExactMatrix recon(d, d);
        for (std::size_t j = 0; j < hd; ++j)
            if (!coeffs[j].is_zero()) recon = recon + h.basis[j].scaled(coeffs[j]);
        if (!(recon - mat).is_zero())
            throw std::runtime_error(
                "curvature endomorphism lies outside the holonomy span");
        return coeffs;
    };

    std::vector<GaussianRational> full(total);
    auto store = [&](std::uint32_t a, std::uint32_t b,
                     const std::vector<GaussianRational>& v) {
        SparseVec s = sparsify(v);
        t.table_[a * total + b] = s;
        for (auto& [k, c] : s) c = -c;
        t.table_[b * total + a] = std::move(s);
    };

    // [h_i, h_j] = commutator, resolved in the hol basis.
    for (std::uint32_t i = 0; i < hd; ++i)
        for (std::uint32_t j = i + 1; j < hd; ++j) {
            ExactMatrix comm = h.basis[i] * h.basis[j] - h.basis[j] * h.basis[i];
            std::fill(full.begin(), full.end(), GaussianRational(0));
            if (!comm.is_zero()) {
                std::vector<GaussianRational> coeffs = resolve_in_hol(comm);
                for (std::size_t k = 0; k < hd; ++k) full[k] = coeffs[k];
            }
            store(i, j, full);
        }

    // [h_i, X_mu] = h_i e_mu, a tangent vector.
    for (std::uint32_t i = 0; i < hd; ++i)
        for (std::uint32_t mu = 0; mu < d; ++mu) {
            std::fill(full.begin(), full.end(), GaussianRational(0));
            for (std::uint32_t r = 0; r < d; ++r) full[hd + r] = h.basis[i].at(r, mu);
            store(i, hd + mu, full);
        }

    // [X_mu, X_nu] = -R(e_mu, e_nu), resolved in the hol basis.
    for (std::uint32_t mu = 0; mu < d; ++mu)
        for (std::uint32_t nu = mu + 1; nu < d; ++nu) {
            ExactMatrix e(d, d);
            bool nonzero = false;
            for (std::uint32_t rho = 0; rho < d; ++rho)
                for (std::uint32_t sig = 0; sig < d; ++sig) {
                    GaussianRational v = riem.at(rho, sig, mu, nu).constant_value();
                    if (!v.is_zero()) {
                        e.at(rho, sig) = -v;
                        nonzero = true;
                    }
                }
            std::fill(full.begin(), full.end(), GaussianRational(0));
            if (nonzero) {
                std::vector<GaussianRational> coeffs = resolve_in_hol(e);
                for (std::size_t k = 0; k < hd; ++k) full[k] = coeffs[k];
            }
            store(hd + mu, hd + nu, full);
        }

    return t;
}

std::optional<std::string> check_jacobi(const TransvectionAlgebra& t) {
    const std::uint32_t n = static_cast<std::uint32_t>(t.dim());
    std::vector<GaussianRational> acc(n), w(n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = a + 1; b < n; ++b)
            for (std::uint32_t c = b + 1; c < n; ++c) {
                std::fill(acc.begin(), acc.end(), GaussianRational(0));
                // [a,[b,c]] + [b,[c,a]] + [c,[a,b]]
                const std::array<std::array<std::uint32_t, 3>, 3> cyc = {
                    {{a, b, c}, {b, c, a}, {c, a, b}}};
                for (const auto& [x, y, z] : cyc) {
                    const auto& inner = t.bracket(y, z);
                    if (inner.empty()) continue;
                    for (const auto& [k, coef] : inner)
                        for (const auto& [k2, coef2] : t.bracket(x, k))
                            acc[k2] += coef * coef2;
                }
                for (std::uint32_t k = 0; k < n; ++k)
                    if (!acc[k].is_zero())
                        return "Jacobi fails on basis triple (" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c) + ")";
            }
    return std::nullopt;
}

namespace {

// Span dimension of [g, S] for a subspace S given by coefficient vectors.
std::vector<std::vector<GaussianRational>> bracket_space(
    const TransvectionAlgebra& t, const std::vector<std::vector<GaussianRational>>& s) {
    std::vector<std::vector<GaussianRational>> out;
    for (std::uint32_t a = 0; a < t.dim(); ++a)
        for (const auto& v : s) {
            std::vector<GaussianRational> b = t.ad(a, v);
            bool nz = false;
            for (const auto& x : b)
                if (!x.is_zero()) {
                    nz = true;
                    break;
                }
            if (nz) out.push_back(std::move(b));
        }
    return out;
}

std::vector<std::vector<GaussianRational>> basis_vectors(std::size_t dim) {
    std::vector<std::vector<GaussianRational>> v;
    for (std::size_t k = 0; k < dim; ++k) {
        std::vector<GaussianRational> e(dim);
        e[k] = GaussianRational(1);
        v.push_back(std::move(e));
    }
    return v;
}

}  // namespace

NilpotencyReport nilpotency_certificate(const TransvectionAlgebra& t,
                                        const std::vector<std::uint32_t>& parallel_block) {
    NilpotencyReport rep;
    const std::size_t total = t.dim();
    rep.dim_g = total;

    std::vector<std::vector<GaussianRational>> g0 = basis_vectors(total);
    std::vector<std::vector<GaussianRational>> g1 = span_basis(bracket_space(t, g0));
    std::vector<std::vector<GaussianRational>> g2 = span_basis(bracket_space(t, g1));
    std::vector<std::vector<GaussianRational>> g3 = span_basis(bracket_space(t, g2));
    rep.dim_g1 = g1.size();
    rep.dim_g2 = g2.size();
    rep.dim_g3 = g3.size();
    rep.three_step_nilpotent = rep.dim_g1 > 0 && rep.dim_g2 > 0 && rep.dim_g3 == 0;

    // Reference spaces: hol + U' and U' in combined-basis coordinates.
    std::vector<std::vector<GaussianRational>> hol_plus_par, par;
    for (std::size_t k = 0; k < t.hol_dim(); ++k) {
        std::vector<GaussianRational> e(total);
        e[k] = GaussianRational(1);
        hol_plus_par.push_back(std::move(e));
    }
    for (std::uint32_t c : parallel_block) {
        std::vector<GaussianRational> e(total);
        e[t.hol_dim() + c] = GaussianRational(1);
        hol_plus_par.push_back(e);
        par.push_back(std::move(e));
    }
    auto spans_equal = [](const std::vector<std::vector<GaussianRational>>& x,
                          const std::vector<std::vector<GaussianRational>>& y) {
        if (x.empty() && y.empty()) return true;
        std::size_t rx = span_rank(x), ry = span_rank(y);
        if (rx != ry) return false;
        std::vector<std::vector<GaussianRational>> joint = x;
        joint.insert(joint.end(), y.begin(), y.end());
        return span_rank(joint) == rx;
    };
    rep.g1_is_hol_plus_parallel = spans_equal(g1, hol_plus_par);
    rep.g2_is_parallel = spans_equal(g2, par);

    // Center: joint kernel of all ad maps.
    std::vector<std::vector<GaussianRational>> rows;
    for (std::uint32_t a = 0; a < total; ++a) {
        // rows of the map v -> [e_a, v]
        std::vector<std::vector<GaussianRational>> mat(
            total, std::vector<GaussianRational>(total));
        for (std::uint32_t b = 0; b < total; ++b)
            for (const auto& [k, c] : t.bracket(a, b)) mat[k][b] = c;
        for (auto& r : mat) rows.push_back(std::move(r));
    }
    std::vector<std::vector<GaussianRational>> center =
        ExactMatrix::from_rows(rows).kernel_basis();
    rep.center_dim = center.size();
    std::vector<std::vector<GaussianRational>> joint = center;
    joint.insert(joint.end(), par.begin(), par.end());
    rep.parallel_in_center = span_rank(joint) == span_rank(center);
    rep.center_is_parallel = rep.parallel_in_center && rep.center_dim == par.size();

    // Derived algebra abelian: [g1, g1] = 0.
    rep.derived_abelian = true;
    for (const auto& u : g1)
        for (const auto& v : g1) {
            std::vector<GaussianRational> acc(total);
            for (std::uint32_t b = 0; b < total; ++b) {
                if (u[b].is_zero()) continue;
                std::vector<GaussianRational> av = t.ad(b, v);
                for (std::uint32_t k = 0; k < total; ++k) acc[k] += u[b] * av[k];
            }
            for (const auto& x : acc)
                if (!x.is_zero()) rep.derived_abelian = false;
        }

    rep.note = "lower central series dims (" + std::to_string(rep.dim_g1) + "," +
               std::to_string(rep.dim_g2) + "," + std::to_string(rep.dim_g3) + "), center " +
               std::to_string(rep.center_dim);
    return rep;
}

ComplexStructureReport complex_structure_check(const MetricModel& frances,
                                               const HolonomySpan& hol) {
    ComplexStructureReport rep;
    const std::uint32_t d = 4;
    if (frances.dim() != d)
        throw std::invalid_argument("complex-structure check expects the 4-dim model");

    // J d1 = d2, J d2 = -d1, J d3 = d4, J d4 = -d3.
    ExactMatrix J(d, d);
    J.at(1, 0) = GaussianRational(1);
    J.at(0, 1) = GaussianRational(-1);
    J.at(3, 2) = GaussianRational(1);
    J.at(2, 3) = GaussianRational(-1);

    ExactMatrix minus_id = ExactMatrix::identity(d).scaled(GaussianRational(-1));
    rep.j_squares_minus_one = (J * J) == minus_id;

    // g0 = the constant part of the metric, i.e. 2dy1dy3 + 2dy2dy4 (the
    // (y2)^2 dy1^2 term has no constant coefficient).
    ExactMatrix g0(d, d);
    for (std::uint32_t a = 0; a < d; ++a)
        for (std::uint32_t b = 0; b < d; ++b) g0.at(a, b) = frances.g().at(a, b).constant_value();
    rep.g0_hermitian = (J.transpose() * g0 * J) == g0;

    rep.hol_invariant = true;
    for (const ExactMatrix& b : hol.basis)
        if (!(J * b - b * J).is_zero()) rep.hol_invariant = false;

    // phi_{a,b} = diag(s, t, s t^2, s^2 t) with independent formal scales.
    // J couples coordinates 1<->2 and 3<->4, so commutation forces s = t.
    const std::uint32_t nv = 2;  // symbols s, t
    auto mono = [&](int es, int et) {
        MultiPoly p = MultiPoly::constant(nv, GaussianRational(1));
        for (int k = 0; k < es; ++k) p = p * MultiPoly::variable(nv, 0);
        for (int k = 0; k < et; ++k) p = p * MultiPoly::variable(nv, 1);
        return p;
    };
    std::vector<MultiPoly> phi = {mono(1, 0), mono(0, 1), mono(1, 2), mono(2, 1)};
    rep.phi_ab_commutes_with_j = true;
    for (std::uint32_t r = 0; r < d; ++r)
        for (std::uint32_t c = 0; c < d; ++c) {
            if (J.at(r, c).is_zero()) continue;
            // (J Phi - Phi J)_{rc} = J_{rc} (phi_c - phi_r)
            MultiPoly diff = phi[c] - phi[r];
            if (!diff.is_zero()) {
                rep.phi_ab_commutes_with_j = false;
                rep.witness = "J Phi - Phi J is nonzero at (" + std::to_string(r + 1) + "," +
                              std::to_string(c + 1) + ")";
            }
        }
    return rep;
}

}  // namespace pkv
