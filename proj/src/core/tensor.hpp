#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chart.hpp"
#include "linalg.hpp"
#include "poly.hpp"

namespace pkv {

enum class Variance { Upper, Lower };

// Multi-index array of polynomial components on a chart. Storage is dense
// row-major over dim^rank; zero components are empty polynomials.
class TensorField {
public:
    TensorField() = default;
    TensorField(ChartPtr chart, std::vector<Variance> variance);

    const ChartPtr& chart() const { return chart_; }
    const std::vector<Variance>& variance() const { return variance_; }
    std::uint32_t rank() const { return static_cast<std::uint32_t>(variance_.size()); }
    std::uint32_t dim() const { return chart_->dim(); }
    std::size_t size() const { return comps_.size(); }

    MultiPoly& operator[](std::size_t flat) { return comps_[flat]; }
    const MultiPoly& operator[](std::size_t flat) const { return comps_[flat]; }

    template <typename... Ix>
    MultiPoly& at(Ix... ix) {
        return comps_[offset(ix...)];
    }
    template <typename... Ix>
    const MultiPoly& at(Ix... ix) const {
        return comps_[offset(ix...)];
    }

    std::vector<std::uint32_t> unflatten(std::size_t flat) const;
    bool is_zero() const;
    bool operator==(const TensorField& o) const;

    // Index tuple and printed form of the first nonzero component, if any.
    std::optional<std::pair<std::vector<std::uint32_t>, std::string>> first_nonzero() const;

private:
    template <typename... Ix>
    std::size_t offset(Ix... ix) const {
        static_assert(sizeof...(Ix) > 0);
        std::size_t flat = 0;
        ((flat = flat * dim_ + static_cast<std::size_t>(ix)), ...);
        return flat;
    }

    ChartPtr chart_;
    std::vector<Variance> variance_;
    std::uint32_t dim_ = 0;
    std::vector<MultiPoly> comps_;
};

// A packaged chart with metric, exact inverse metric and a provenance label.
// Construction verifies symmetry (Hermitian symmetry on holomorphic-pair
// charts) and the exact identity g_{AC} g^{CB} = delta_A^B.
class MetricModel {
public:
    static MetricModel create(ChartPtr chart, TensorField g, TensorField g_inv,
                              std::string provenance);

    const ChartPtr& chart() const { return chart_; }
    std::uint32_t dim() const { return chart_->dim(); }
    const TensorField& g() const { return g_; }
    const TensorField& g_inv() const { return g_inv_; }
    const std::string& provenance() const { return provenance_; }

    // Metric value at a real point (real charts only).
    std::vector<double> eval_g(const std::vector<double>& point) const;

private:
    MetricModel() = default;
    ChartPtr chart_;
    TensorField g_, g_inv_;
    std::string provenance_;
};

// --- Connection and curvature -------------------------------------------------

// Levi-Civita connection coefficients, stored as gamma[c][a][b] = Gamma^c_{ab}.
// Real charts use the full metric formula; holomorphic-pair charts return the
// unbarred symbols Gamma^C_{AB} = h^{DC} d_A h_{BD} (barred symbols are their
// conjugates, mixed symbols vanish).
TensorField levi_civita(const MetricModel& m);

// Curvature. Real charts: riem[l][k][i][j] = R^l_{kij}, the coefficient of
// d_l in R(d_i, d_j) d_k. Holomorphic-pair charts: riem[D][C][A][B] is the
// coefficient of d_D in R(conj d_A, d_B) d_C; pure-type components vanish for
// a Kaehler metric and are not stored.
TensorField riemann(const MetricModel& m, const TensorField& gamma);

// Ricci tensor by trace contraction. Real charts: ric[j][k] = sum_i R^i_{kij}.
// Holomorphic-pair charts: ric[C][B] = Ric(d_C, conj d_B) = -sum_A riem[A][C][B][A].
TensorField ricci(const MetricModel& m, const TensorField& riem);

// Exact determinant of the metric component matrix.
MultiPoly det_metric(const MetricModel& m);

// Second, independent Ricci-flatness route for holomorphic-pair models:
// Ric(d_A, conj d_B) = -d_A d_Bbar log det h, so a constant nonzero determinant
// certifies Ric = 0.
struct LogDetCertificate {
    bool applicable = false;  // determinant is a nonzero constant
    GaussianRational det_value;
    bool ricci_flat = false;
};
LogDetCertificate ricci_logdet_certificate(const MetricModel& m);

// Fully lowered curvature rlow[a][b][c][d] = g(R(d_a, d_b) d_c, d_d) (real charts).
TensorField lower_riemann(const MetricModel& m, const TensorField& riem);

// Weyl tensor (0,4) on real charts via the Schouten tensor and Kulkarni-Nomizu
// product; requires dim >= 4. For Ricci-flat inputs W equals the lowered
// curvature identically.
TensorField weyl(const MetricModel& m, const TensorField& riem, const TensorField& ric);

// Covariant derivative with Christoffel corrections on every index; the new
// (lower) index comes last. Real charts only.
TensorField covariant_derivative(const MetricModel& m, const TensorField& gamma,
                                 const TensorField& t);

// Kaehler covariant derivative of the metric (must vanish) and of the mixed
// curvature tensor, in the holomorphic frame. Returns the pair
// (nabla_E, nabla_Ebar) with the derivative index last.
TensorField kahler_nabla_metric(const MetricModel& m, const TensorField& gamma);
std::pair<TensorField, TensorField> kahler_nabla_mixed_curvature(const MetricModel& m,
                                                                 const TensorField& gamma,
                                                                 const TensorField& riem);

// Pullback of the metric under an exact linear map: (L*g)_AB(x) =
// L^C_A L^D_B g_CD(Lx). On holomorphic-pair charts L acts on the z-block and
// conj(L) on the w-block.
TensorField pullback_metric(const MetricModel& m, const ExactMatrix& L);

// --- Pointwise numerics --------------------------------------------------------

struct SignatureResult {
    enum class Status { Ok, Indeterminate } status = Status::Ok;
    int positive = 0;
    int negative = 0;
    double min_abs_eigenvalue = 0.0;
};

// Eigenvalue sign counts of the metric at each point (real charts); entries
// with |eigenvalue| < tol are reported as indeterminate rather than guessed.
std::vector<SignatureResult> signature_at(const MetricModel& m,
                                          const std::vector<std::vector<double>>& points,
                                          double tol = 1e-9);

// --- Identity checks used by suites and tests ----------------------------------

// First Bianchi identity R^l_{[kij]} = 0; returns a witness string on failure.
std::optional<std::string> check_first_bianchi(const TensorField& riem);

// Pair symmetry of the lowered curvature, rlow[a][b][c][d] = rlow[c][d][a][b].
std::optional<std::string> check_pair_symmetry(const TensorField& rlow);

}  // namespace pkv
