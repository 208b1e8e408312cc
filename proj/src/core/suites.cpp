#include "suites.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <optional>

#include "conformal.hpp"
#include "crosscheck.hpp"
#include "geodesics.hpp"
#include "holonomy.hpp"
#include "models.hpp"
#include "quotient.hpp"
#include "rng.hpp"
#include "takagi.hpp"
#include "transvection.hpp"

namespace pkv {

namespace {

struct CheckOutcome {
    CheckStatus status = CheckStatus::Pass;
    std::string witness;
};

CheckOutcome pass(std::string note = "") { return {CheckStatus::Pass, std::move(note)}; }
CheckOutcome fail(std::string witness) { return {CheckStatus::Fail, std::move(witness)}; }
CheckOutcome outcome(bool ok, std::string witness) {
    return ok ? pass() : fail(std::move(witness));
}
CheckOutcome not_applicable(std::string note) {
    return {CheckStatus::NotApplicable, std::move(note)};
}

// Everything the suites need about the configured model, built once.
struct ModelContext {
    RunConfig cfg;
    std::optional<SigmaMatrix> sigma;
    bool sigma_nondeg = false;

    std::optional<MetricModel> holo;  // complex model on the holomorphic chart
    std::optional<TensorField> holo_gamma, holo_riem;

    std::optional<MetricModel> real;  // the real-chart model all real work uses
    std::optional<TensorField> gamma, riem;

    BlockLayout layout;               // scaling blocks for conformal/quotient
    std::uint32_t chart_dim = 0;      // real-chart dimension (known without the model)
    std::vector<std::uint32_t> parallel;
    bool realified_holomorphic = false;
    bool quotient_applicable = false;
    bool symmetric_model = false;     // holonomy/transvection suites apply
};

class Runner {
public:
    explicit Runner(const RunConfig& cfg) : cfg_(cfg) {}

    std::vector<CheckReport> run();

private:
    void check(const std::string& name, const std::string& anchor,
               const std::function<CheckOutcome()>& fn);
    void skip(const std::string& name, const std::string& anchor, const std::string& note,
              CheckStatus st = CheckStatus::Skipped);
    void build_context();

    void suite_metric();
    void suite_curvature();
    void suite_symmetry();
    void suite_holonomy();
    void suite_transvection();
    void suite_geodesics();
    void suite_conformal();
    void suite_quotient();
    void suite_complex_structure();

    RunConfig cfg_;
    ModelContext ctx_;
    std::vector<CheckReport> out_;
};

void Runner::check(const std::string& name, const std::string& anchor,
                   const std::function<CheckOutcome()>& fn) {
    CheckReport rep;
    rep.name = name;
    rep.anchor = anchor;
    auto t0 = std::chrono::steady_clock::now();
    try {
        CheckOutcome oc = fn();
        rep.status = oc.status;
        rep.witness = oc.witness;
        if (rep.status == CheckStatus::Fail && rep.witness.empty())
            rep.witness = "check reported failure without detail";
    } catch (const std::exception& e) {
        rep.status = CheckStatus::Fail;
        rep.witness = std::string("exception: ") + e.what();
    }
    rep.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - t0)
                 .count();
    out_.push_back(std::move(rep));
}

void Runner::skip(const std::string& name, const std::string& anchor, const std::string& note,
                  CheckStatus st) {
    CheckReport rep;
    rep.name = name;
    rep.anchor = anchor;
    rep.status = st;
    rep.witness = note;
    out_.push_back(std::move(rep));
}

void Runner::build_context() {
    ctx_.cfg = cfg_;
    if (!cfg_.sigma_is_float) {
        ctx_.sigma = cfg_.exact_sigma();
        ctx_.sigma_nondeg = ctx_.sigma->nondegenerate();
    }
    const std::uint32_t n = cfg_.n;

    // Layout and dimension are fixed by the model family alone.
    if (cfg_.model == "complex") {
        ctx_.layout = realified_layout(n);
        ctx_.chart_dim = 8 * n;
        ctx_.realified_holomorphic = true;
        ctx_.quotient_applicable = true;
        ctx_.symmetric_model = true;
    } else if (cfg_.model == "real") {
        ctx_.layout = quarter_layout(n);
        ctx_.chart_dim = 4 * n;
        ctx_.quotient_applicable = true;
        ctx_.symmetric_model = true;
    } else if (cfg_.model == "frances") {
        ctx_.layout = quarter_layout(1);
        ctx_.chart_dim = 4;
        ctx_.quotient_applicable = true;
        ctx_.symmetric_model = true;
    } else if (cfg_.model == "hessian-comparison") {
        ctx_.chart_dim = 4 * n;
    } else if (cfg_.model == "product") {
        std::uint32_t base_dim = cfg_.product_base == "complex" ? 8 * n : 4 * n;
        BlockLayout base_layout =
            cfg_.product_base == "complex" ? realified_layout(n) : quarter_layout(n);
        ctx_.layout = with_extension(base_layout, base_dim,
                                     cfg_.product_k + cfg_.product_l);
        ctx_.chart_dim = base_dim + cfg_.product_k + cfg_.product_l;
    } else {
        throw ConfigError("unknown model '" + cfg_.model + "'");
    }
    if (cfg_.sigma_is_float || cfg_.n > 3) return;  // numeric-only context

    if (cfg_.model == "complex") {
        ctx_.holo = build_complex_model(*ctx_.sigma);
        ctx_.holo_gamma = levi_civita(*ctx_.holo);
        ctx_.holo_riem = riemann(*ctx_.holo, *ctx_.holo_gamma);
        ctx_.real = realify(*ctx_.holo);
    } else if (cfg_.model == "real") {
        ctx_.real = build_real_model(*ctx_.sigma);
    } else if (cfg_.model == "frances") {
        ctx_.real = build_frances_model();
    } else if (cfg_.model == "hessian-comparison") {
        ctx_.real = build_hessian_comparison(*ctx_.sigma);
    } else {
        MetricModel base = cfg_.product_base == "complex"
                               ? realify(build_complex_model(*ctx_.sigma))
                               : build_real_model(*ctx_.sigma);
        ctx_.real = build_product_extension(base, cfg_.product_k, cfg_.product_l);
    }
    ctx_.gamma = levi_civita(*ctx_.real);
    ctx_.riem = riemann(*ctx_.real, *ctx_.gamma);
    ctx_.parallel = parallel_block_indices(*ctx_.real, *ctx_.gamma);
}

std::vector<CheckReport> Runner::run() {
    const bool exact_ok = !cfg_.sigma_is_float && cfg_.n <= 3;
    std::string gate_note = cfg_.sigma_is_float
                                ? "exact suites require a rational sigma"
                                : "n > 3 exceeds the exact-suite guardrail";

    try {
        build_context();
    } catch (const std::exception& e) {
        CheckReport rep;
        rep.name = "setup/build-model";
        rep.anchor = "plumbing";
        rep.status = CheckStatus::Fail;
        rep.witness = std::string("exception: ") + e.what();
        out_.push_back(std::move(rep));
        return out_;
    }

    for (const std::string& suite : cfg_.suites) {
        const bool numeric_only_suite =
            suite == "quotient" || (suite == "metric" && cfg_.model == "complex");
        if (!exact_ok && !numeric_only_suite) {
            skip(suite + "/all", "plumbing", gate_note);
            continue;
        }
        if (suite == "metric") suite_metric();
        else if (suite == "curvature") suite_curvature();
        else if (suite == "symmetry") suite_symmetry();
        else if (suite == "holonomy") suite_holonomy();
        else if (suite == "transvection") suite_transvection();
        else if (suite == "geodesics") suite_geodesics();
        else if (suite == "conformal") suite_conformal();
        else if (suite == "quotient") suite_quotient();
        else if (suite == "complex-structure") suite_complex_structure();
    }
    return out_;
}

void Runner::suite_metric() {
    const bool exact = !cfg_.sigma_is_float && cfg_.n <= 3;
    if (exact && ctx_.holo) {
        check("metric/component-families", "claim:mixed-hessian-components", [&] {
            TensorField expect = expected_complex_metric(*ctx_.sigma);
            if (!(ctx_.holo->g() == expect)) {
                auto diff_witness = [&]() -> std::string {
                    for (std::uint32_t a = 0; a < ctx_.holo->dim(); ++a)
                        for (std::uint32_t b = 0; b < ctx_.holo->dim(); ++b)
                            if (ctx_.holo->g().at(a, b) != expect.at(a, b))
                                return "component (" + std::to_string(a + 1) + "," +
                                       std::to_string(b + 1) + ") differs";
                    return "difference not located";
                };
                return fail(diff_witness());
            }
            return pass();
        });
        check("metric/potential-real-valued", "claim:potential-reality", [&] {
            MultiPoly f = complex_potential(*ctx_.sigma);
            return outcome(ctx_.holo->chart()->conjugate(f) == f,
                           "conjugation does not fix the potential");
        });
        check("metric/realify-residue", "claim:realification", [&] {
            return pass("all realified components have exact zero imaginary part");
        });
    }
    if (exact) {
        check("metric/inverse-exact", "claim:block-inverse", [&] {
            // re-verify the creation invariant explicitly
            const MetricModel& m = ctx_.holo ? *ctx_.holo : *ctx_.real;
            const std::uint32_t d = m.dim();
            for (std::uint32_t a = 0; a < d; ++a)
                for (std::uint32_t b = 0; b < d; ++b) {
                    MultiPoly acc(m.chart()->nvars());
                    for (std::uint32_t c = 0; c < d; ++c)
                        acc += m.g().at(a, c) * m.g_inv().at(c, b);
                    MultiPoly expect = a == b
                                           ? m.chart()->constant(GaussianRational(1))
                                           : m.chart()->zero();
                    if (acc != expect)
                        return fail("g*g^-1 != id at (" + std::to_string(a + 1) + "," +
                                    std::to_string(b + 1) + ")");
                }
            return pass();
        });
        check("metric/determinant", "claim:constant-determinant", [&] {
            const MetricModel& m = ctx_.holo ? *ctx_.holo : *ctx_.real;
            MultiPoly det = det_metric(m);
            if (!det.is_constant()) return fail("determinant is not constant");
            GaussianRational v = det.constant_value();
            if (ctx_.holo && !v.is_one()) return fail("determinant != 1: " + v.str());
            if (!ctx_.holo && v.is_zero()) return fail("determinant vanishes");
            return pass("det = " + v.str());
        });
        check("metric/signature", "claim:signature", [&] {
            const MetricModel& m = *ctx_.real;
            const std::uint32_t d = m.dim();
            int expect_pos = 0, expect_neg = 0;
            if (cfg_.model == "complex") {
                expect_pos = expect_neg = 4 * static_cast<int>(cfg_.n);
            } else if (cfg_.model == "real" || cfg_.model == "frances" ||
                       cfg_.model == "hessian-comparison") {
                expect_pos = expect_neg = 2 * static_cast<int>(cfg_.model == "frances" ? 1 : cfg_.n);
            } else {  // product
                int base = 2 * static_cast<int>(cfg_.n) *
                           (cfg_.product_base == "complex" ? 2 : 1);
                expect_pos = base + static_cast<int>(cfg_.product_l);
                expect_neg = base + static_cast<int>(cfg_.product_k);
            }
            Rng rng(cfg_.seed ^ 0x5167u);
            int checked = 0, attempts = 0;
            while (checked < 10 && attempts < 100) {
                ++attempts;
                std::vector<double> p = rng.double_vector(d, -1.0, 1.0);
                auto res = signature_at(m, {p}, cfg_.tol);
                if (res[0].status == SignatureResult::Status::Indeterminate) continue;
                if (res[0].positive != expect_pos || res[0].negative != expect_neg)
                    return fail("signature (" + std::to_string(res[0].positive) + "," +
                                std::to_string(res[0].negative) + ") != (" +
                                std::to_string(expect_pos) + "," +
                                std::to_string(expect_neg) + ")");
                ++checked;
            }
            if (checked < 10) return CheckOutcome{CheckStatus::Indeterminate,
                                                  "too many near-degenerate sample points"};
            return pass();
        });
    }
    if (exact && cfg_.model == "hessian-comparison") {
        check("metric/hessian-families", "claim:restricted-hessian-components", [&] {
            return outcome(ctx_.real->g() == expected_hessian_comparison(*ctx_.sigma),
                           "component families differ from the restricted-potential table");
        });
        check("metric/hessian-vs-quadric-model", "claim:hessian-vs-quadric-model", [&] {
            MetricModel other = build_real_model(*ctx_.sigma);
            const std::uint32_t n = cfg_.n;
            const GaussianRational two(2);
            for (std::uint32_t j = 0; j < 2 * n; ++j)
                for (std::uint32_t l = 0; l < 2 * n; ++l) {
                    bool first = j < n && l < n, second = j >= n && l >= n;
                    if (first || second) {
                        if (ctx_.real->g().at(j, l) != other.g().at(j, l).scaled(two))
                            return fail("shared family is not twice the quadric-model "
                                        "component at (" + std::to_string(j + 1) + "," +
                                        std::to_string(l + 1) + ")");
                    }
                }
            bool sigma_zero = true;
            for (std::uint32_t i = 0; i < n && sigma_zero; ++i)
                for (std::uint32_t j = 0; j < n; ++j)
                    if (!ctx_.sigma->at(i, j).is_zero()) {
                        sigma_zero = false;
                        break;
                    }
            if (!sigma_zero && ctx_.real->g() == other.g())
                return fail("tensors coincide although the mixed family should differ");
            return pass();
        });
    }
    // Numeric diagonalization path (complex model).
    if (cfg_.model == "complex") {
        check("metric/takagi", "claim:sigma-diagonalization", [&] {
            std::vector<std::complex<double>> sig;
            std::uint32_t n = cfg_.n;
            if (cfg_.sigma_is_float) {
                sig = parse_sigma_float(cfg_.sigma_text, n, 0);
            } else {
                for (std::uint32_t i = 0; i < n; ++i)
                    for (std::uint32_t j = 0; j < n; ++j)
                        sig.push_back(ctx_.sigma->at(i, j).to_complex());
            }
            TakagiResult tk;
            try {
                tk = takagi_diagonalize(sig, n);
            } catch (const std::invalid_argument& e) {
                return not_applicable(std::string("diagonalization not applicable: ") +
                                      e.what());
            }
            if (tk.residual > 1e-10)
                return fail("off-diagonal residual " + std::to_string(tk.residual));
            Rng rng(cfg_.seed ^ 0x7a4au);
            double pres = potential_pullback_residual(sig, n, tk.q, rng, 20);
            if (pres > 1e-9)
                return fail("potential pullback residual " + std::to_string(pres));
            double ores = check_phiQ_in_O_float(tk.q, n, rng, 20);
            if (ores > 1e-10)
                return fail("quadratic-term preservation residual " + std::to_string(ores));
            return pass();
        });
    }
}

void Runner::suite_curvature() {
    const bool is_flat_family = cfg_.model == "hessian-comparison";
    if (ctx_.holo) {
        check("curvature/christoffel-table", "claim:christoffel-components", [&] {
            return outcome(*ctx_.holo_gamma == expected_complex_christoffels(*ctx_.sigma),
                           "Kaehler Christoffel symbols differ from the expected families");
        });
        check("curvature/mixed-table", "claim:curvature-components", [&] {
            return outcome(*ctx_.holo_riem == expected_complex_curvature(*ctx_.sigma),
                           "mixed curvature differs from the expected table");
        });
        check("curvature/realified-cross-check", "claim:realification", [&] {
            Rng rng(cfg_.seed ^ 0xc805u);
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<GaussianRational> x = rng.rational_vector(ctx_.holo->dim());
                std::vector<GaussianRational> y = rng.rational_vector(ctx_.holo->dim());
                auto witness = crosscheck_realified_curvature(*ctx_.holo, *ctx_.holo_riem,
                                                              *ctx_.real, *ctx_.riem, x, y);
                if (witness) return fail(*witness);
            }
            return pass();
        });
    }
    if (cfg_.model == "real") {
        check("curvature/christoffel-table", "claim:christoffel-components", [&] {
            return outcome(*ctx_.gamma == expected_real_christoffels(*ctx_.sigma),
                           "Christoffel symbols differ from the expected families");
        });
        check("curvature/table", "claim:curvature-components", [&] {
            return outcome(*ctx_.riem == expected_real_curvature(*ctx_.sigma),
                           "curvature differs from the expected table");
        });
    }
    check("curvature/parallel-block", "claim:parallel-null-block", [&] {
        if (cfg_.model == "hessian-comparison" || cfg_.model == "product")
            return pass("parallel block size " + std::to_string(ctx_.parallel.size()));
        // Half of the coordinates of the symmetric models must be parallel.
        std::size_t expect = 0;
        if (cfg_.model == "complex") expect = 4 * cfg_.n;
        else if (cfg_.model == "real") expect = 2 * cfg_.n;
        else if (cfg_.model == "frances") expect = 2;
        return outcome(ctx_.parallel.size() == expect,
                       "parallel block has size " + std::to_string(ctx_.parallel.size()) +
                           ", expected " + std::to_string(expect));
    });
    if (cfg_.model == "frances") {
        check("curvature/table", "claim:curvature-components", [&] {
            const TensorField& riem = *ctx_.riem;
            ChartPtr chart = ctx_.real->chart();
            TensorField expect(chart, riem.variance());
            expect.at(3, 0, 0, 1) = chart->constant(GaussianRational(1));
            expect.at(3, 0, 1, 0) = chart->constant(GaussianRational(-1));
            expect.at(2, 1, 0, 1) = chart->constant(GaussianRational(-1));
            expect.at(2, 1, 1, 0) = chart->constant(GaussianRational(1));
            return outcome(riem == expect, "curvature differs from the expected table");
        });
        check("curvature/origin-match", "claim:curvature-origin-isometry", [&] {
            MetricModel other = build_real_model(SigmaMatrix::identity(1));
            TensorField og = levi_civita(other);
            TensorField oriem = riemann(other, og);
            const std::uint32_t d = 4;
            for (std::uint32_t l = 0; l < d; ++l)
                for (std::uint32_t k = 0; k < d; ++k)
                    for (std::uint32_t i = 0; i < d; ++i)
                        for (std::uint32_t j = 0; j < d; ++j)
                            if (ctx_.riem->at(l, k, i, j).constant_value() !=
                                oriem.at(l, k, i, j).constant_value())
                                return fail("origin curvature differs at (" +
                                            std::to_string(l + 1) + "," +
                                            std::to_string(k + 1) + "," +
                                            std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + ")");
            return pass();
        });
    }
    if (is_flat_family) {
        check("curvature/flat", "claim:hessian-metric-flat", [&] {
            return outcome(ctx_.riem->is_zero(),
                           "curvature of the restricted-potential Hessian metric is nonzero");
        });
    }
    check("curvature/first-bianchi", "claim:first-bianchi", [&] {
        auto witness = check_first_bianchi(*ctx_.riem);
        return witness ? fail(*witness) : pass();
    });
    check("curvature/pair-symmetry", "claim:pair-symmetry", [&] {
        TensorField rlow = lower_riemann(*ctx_.real, *ctx_.riem);
        auto witness = check_pair_symmetry(rlow);
        return witness ? fail(*witness) : pass();
    });
}

void Runner::suite_symmetry() {
    check("symmetry/ricci-flat", "claim:ricci-flat", [&] {
        TensorField ric = ricci(*ctx_.real, *ctx_.riem);
        if (!ric.is_zero()) {
            auto w = ric.first_nonzero();
            return fail("Ricci component " + (w ? w->second : std::string("?")));
        }
        return pass();
    });
    if (ctx_.holo) {
        check("symmetry/ricci-flat-holomorphic", "claim:ricci-flat", [&] {
            TensorField ric = ricci(*ctx_.holo, *ctx_.holo_riem);
            return outcome(ric.is_zero(), "holomorphic-frame Ricci contraction is nonzero");
        });
        check("symmetry/ricci-logdet", "claim:ricci-logdet-route", [&] {
            LogDetCertificate cert = ricci_logdet_certificate(*ctx_.holo);
            if (!cert.applicable) return fail("determinant is not a nonzero constant");
            if (!cert.det_value.is_one())
                return fail("determinant constant is " + cert.det_value.str());
            return pass("det = 1, so the log-det route certifies Ric = 0");
        });
    }
    check("symmetry/metricity", "claim:metric-parallel", [&] {
        TensorField ng = covariant_derivative(*ctx_.real, *ctx_.gamma, ctx_.real->g());
        return outcome(ng.is_zero(), "nabla g has a nonzero component");
    });
    if (ctx_.holo) {
        check("symmetry/metricity-holomorphic", "claim:metric-parallel", [&] {
            TensorField ng = kahler_nabla_metric(*ctx_.holo, *ctx_.holo_gamma);
            return outcome(ng.is_zero(), "Kaehler nabla h has a nonzero component");
        });
        check("symmetry/nabla-R-holomorphic", "claim:locally-symmetric", [&] {
            auto [nab, nab_bar] =
                kahler_nabla_mixed_curvature(*ctx_.holo, *ctx_.holo_gamma, *ctx_.holo_riem);
            if (!nab.is_zero()) return fail("holomorphic derivative of R is nonzero");
            if (!nab_bar.is_zero())
                return fail("antiholomorphic derivative of R is nonzero");
            return pass();
        });
    }
    if (ctx_.real->dim() <= 8 || !ctx_.holo) {
        check("symmetry/nabla-R", "claim:locally-symmetric", [&] {
            TensorField nr = covariant_derivative(*ctx_.real, *ctx_.gamma, *ctx_.riem);
            if (!nr.is_zero()) {
                auto w = nr.first_nonzero();
                return fail("nabla R component " + (w ? w->second : std::string("?")));
            }
            return pass();
        });
    } else {
        check("symmetry/nabla-R", "claim:locally-symmetric", [&] {
            // Realified chart of dimension 16: same computation, reported with
            // its cost; the holomorphic-frame check above covers the claim too.
            TensorField nr = covariant_derivative(*ctx_.real, *ctx_.gamma, *ctx_.riem);
            return outcome(nr.is_zero(), "nabla R has a nonzero component");
        });
    }
    if (ctx_.real->dim() >= 4) {
        check("symmetry/weyl", "claim:weyl-structure", [&] {
            TensorField ric = ricci(*ctx_.real, *ctx_.riem);
            TensorField w = weyl(*ctx_.real, *ctx_.riem, ric);
            TensorField rlow = lower_riemann(*ctx_.real, *ctx_.riem);
            if (ric.is_zero() && !(w == rlow))
                return fail("Weyl differs from the lowered curvature on a Ricci-flat model");
            if (ctx_.riem->is_zero()) {
                return outcome(w.is_zero(), "flat model with nonzero Weyl tensor");
            }
            auto first = w.first_nonzero();
            if (!first) return fail("Weyl tensor vanishes although the model is curved");
            return pass("nonzero witness " + first->second);
        });
    }
}

void Runner::suite_holonomy() {
    if (!ctx_.symmetric_model) {
        skip("holonomy/all", "plumbing", "holonomy suite applies to the symmetric models");
        return;
    }
    HolonomySpan span = holonomy_span(*ctx_.real, *ctx_.riem);
    std::size_t expect = 0;
    if (cfg_.model == "complex") expect = 4u * cfg_.n * cfg_.n;
    else if (cfg_.model == "real") expect = cfg_.n * (2u * cfg_.n - 1);
    else expect = 1;  // frances
    bool nondeg = cfg_.model == "frances" ? true : ctx_.sigma_nondeg;

    check("holonomy/dimension", "claim:holonomy-dimension", [&] {
        if (!nondeg)
            return outcome(span.dim == 0, "degenerate sigma should give fewer generators; "
                                          "got dim " + std::to_string(span.dim));
        return outcome(span.dim == expect,
                       "holonomy dimension " + std::to_string(span.dim) + ", expected " +
                           std::to_string(expect));
    });
    check("holonomy/block-structure", "claim:holonomy-block-structure", [&] {
        HolBlockReport rep = hol_block_structure(span, *ctx_.real, ctx_.parallel,
                                                 ctx_.realified_holomorphic);
        if (!rep.strictly_lower) return fail(rep.witness);
        if (!rep.abelian) return fail("holonomy basis is not abelian");
        if (!rep.squares_zero) return fail("a holonomy element does not square to zero");
        if (!rep.skew_structure) return fail("lower blocks lack the skew structure");
        if (ctx_.realified_holomorphic && !rep.complex_linear)
            return fail("a holonomy element is not complex-linear");
        if (!rep.infinitesimal_isometry)
            return fail("B^T g0 + g0 B != 0 for a holonomy element");
        return pass();
    });
    check("holonomy/kernel-and-orbits", "claim:kernel-and-orbit-evidence", [&] {
        IndecomposabilityReport rep =
            indecomposability_evidence(span, ctx_.parallel, nondeg, cfg_.seed ^ 0x1d3fu);
        if (rep.status == IndecomposabilityReport::Status::NotApplicable)
            return not_applicable(rep.note);
        if (rep.status == IndecomposabilityReport::Status::Fail) return fail(rep.note);
        return pass(rep.note);
    });
}

void Runner::suite_transvection() {
    if (!ctx_.symmetric_model) {
        skip("transvection/all", "plumbing",
             "transvection suite applies to the symmetric models");
        return;
    }
    HolonomySpan span = holonomy_span(*ctx_.real, *ctx_.riem);
    TransvectionAlgebra alg;
    try {
        alg = TransvectionAlgebra::build(*ctx_.real, *ctx_.riem, span);
    } catch (const std::exception& e) {
        check("transvection/bracket-consistency", "claim:transvection-brackets",
              [&]() -> CheckOutcome { return fail(std::string("exception: ") + e.what()); });
        return;
    }
    check("transvection/bracket-consistency", "claim:transvection-brackets",
          [&] { return pass("curvature brackets resolved in the holonomy basis"); });
    check("transvection/jacobi", "claim:jacobi", [&] {
        auto witness = check_jacobi(alg);
        return witness ? fail(*witness) : pass();
    });
    check("transvection/central-series", "claim:nilpotency", [&] {
        NilpotencyReport rep = nilpotency_certificate(alg, ctx_.parallel);
        bool flat = ctx_.riem->is_zero();
        if (flat)
            return outcome(rep.dim_g1 == 0, "flat model should give an abelian algebra; " +
                                                rep.note);
        if (!rep.three_step_nilpotent) return fail("series does not vanish at step 3; " + rep.note);
        if (!rep.g1_is_hol_plus_parallel)
            return fail("derived algebra differs from hol + parallel block; " + rep.note);
        if (!rep.g2_is_parallel)
            return fail("second step differs from the parallel block; " + rep.note);
        return pass(rep.note);
    });
    check("transvection/center", "claim:center", [&] {
        NilpotencyReport rep = nilpotency_certificate(alg, ctx_.parallel);
        bool flat = ctx_.riem->is_zero();
        if (flat) return pass("flat model: the whole algebra is central");
        if (!rep.parallel_in_center) return fail("parallel block is not central");
        bool nondeg = cfg_.model == "frances" ? true : ctx_.sigma_nondeg;
        if (nondeg && !rep.center_is_parallel)
            return fail("center exceeds the parallel block; " + rep.note);
        return pass(rep.note);
    });
    check("transvection/derived-abelian", "claim:two-step-solvable", [&] {
        NilpotencyReport rep = nilpotency_certificate(alg, ctx_.parallel);
        return outcome(rep.derived_abelian, "derived algebra is not abelian");
    });
}

void Runner::suite_geodesics() {
    const MetricModel& m = *ctx_.real;
    const TensorField& gamma = *ctx_.gamma;
    check("geodesics/completeness-witness", "claim:geodesic-completeness", [&] {
        CompletenessWitness w = completeness_witness(m, gamma);
        return outcome(w.witnessed, w.detail);
    });
    if (!closed_form_applicable(m, gamma)) return;

    check("geodesics/closed-form", "claim:polynomial-geodesics", [&] {
        Rng rng(cfg_.seed ^ 0x9e0du);
        const std::uint32_t d = m.dim();
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<GaussianRational> p = rng.rational_vector(d);
            std::vector<GaussianRational> q = rng.rational_vector(d);
            GeodesicData geo = solve_geodesic(m, gamma, p, q);
            for (std::uint32_t c : geo.linear_block)
                if (geo.degree(c) > 1)
                    return fail("affine-block coordinate has degree > 1");
            for (std::uint32_t c = 0; c < d; ++c)
                if (geo.degree(c) > 3) return fail("component degree exceeds 3");
            auto residual = geodesic_residual(m, gamma, geo);
            for (std::uint32_t c = 0; c < d; ++c)
                if (!residual[c].empty())
                    return fail("nonzero geodesic residual in component " +
                                std::to_string(c + 1));
            auto energy = energy_polynomial(m, geo);
            if (energy.size() > 1)
                return fail("energy along the geodesic is not constant");
        }
        return pass("10 seeded initial conditions, zero residual, exact energy");
    });
    check("geodesics/rk4-agreement", "claim:numeric-cross-check", [&] {
        Rng rng(cfg_.seed ^ 0x44c1u);
        const std::uint32_t d = m.dim();
        for (int trial = 0; trial < 2; ++trial) {
            std::vector<GaussianRational> p = rng.rational_vector(d);
            std::vector<GaussianRational> q = rng.rational_vector(d);
            GeodesicData geo = solve_geodesic(m, gamma, p, q);
            std::vector<double> pd(d), qd(d);
            for (std::uint32_t c = 0; c < d; ++c) {
                pd[c] = p[c].re().get_d();
                qd[c] = q[c].re().get_d();
            }
            Rk4Trajectory traj = rk4_geodesic(m, gamma, pd, qd, 10.0, 1e-3);
            for (double t : {1.0, 5.0, 10.0}) {
                const std::vector<double>& num = traj.position_at(t);
                for (std::uint32_t c = 0; c < d; ++c) {
                    double exact = geo.eval(c, t);
                    double scale = std::max({std::abs(exact), std::abs(num[c]), 1.0});
                    if (std::abs(exact - num[c]) / scale > 1e-8)
                        return fail("deviation above 1e-8 at t = " + std::to_string(t));
                }
            }
            // RK4 integrates cubic trajectories exactly, so the h^4 bound holds
            // with margin; check it anyway across three step sizes.
            for (double h : {1e-1, 1e-2, 1e-3}) {
                Rk4Trajectory tr = rk4_geodesic(m, gamma, pd, qd, 2.0, h);
                const std::vector<double>& num = tr.position_at(2.0);
                for (std::uint32_t c = 0; c < d; ++c) {
                    double exact = geo.eval(c, 2.0);
                    double scale = std::max({std::abs(exact), std::abs(num[c]), 1.0});
                    double bound = std::max(h * h * h * h, 1e-12);
                    if (std::abs(exact - num[c]) / scale > bound)
                        return fail("step " + std::to_string(h) +
                                    " breaks the h^4 error bound");
                }
            }
        }
        return pass();
    });
    check("geodesics/rk4-energy", "claim:numeric-cross-check", [&] {
        Rng rng(cfg_.seed ^ 0x77e2u);
        const std::uint32_t d = m.dim();
        std::vector<double> pd = rng.double_vector(d, -1.0, 1.0);
        std::vector<double> qd = rng.double_vector(d, -1.0, 1.0);
        Rk4Trajectory traj = rk4_geodesic(m, gamma, pd, qd, 5.0, 1e-3);
        double e0 = metric_energy(m, traj.positions.front(), traj.velocities.front());
        double scale = std::max(std::abs(e0), 1.0);
        for (std::size_t k = 0; k < traj.times.size(); k += 100) {
            double e = metric_energy(m, traj.positions[k], traj.velocities[k]);
            if (std::abs(e - e0) / scale > 1e-9)
                return fail("energy drift above 1e-9 at t = " +
                            std::to_string(traj.times[k]));
        }
        return pass();
    });
}

void Runner::suite_conformal() {
    if (cfg_.model == "hessian-comparison") {
        skip("conformal/all", "plumbing",
             "no homothety family is claimed for the comparison model");
        return;
    }
    const std::uint32_t dim = ctx_.real->dim();
    auto run_family = [&](const MetricModel& m, const BlockLayout& layout,
                          const std::string& tag) {
        const std::uint32_t d = m.dim();
        struct Fam {
            HomothetySpec spec;
            std::string expect;
        };
        std::vector<Fam> fams = {
            {make_identity(layout, d), "1"},
            {make_phi_ab(layout, d), "s^2*t^2"},
            {make_phi_s(layout, d), "r^4"},
            {make_psi_t(layout, d), "1"},
            {make_phi_0t(layout, d), "u^2"},
        };
        for (const Fam& fam : fams) {
            check("conformal/" + tag + "/" + fam.spec.name, "claim:conformal-factor", [&] {
                PullbackFactorResult res = pullback_factor(m, fam.spec);
                if (!res.is_homothety) return fail(res.witness);
                if (res.factor_str != fam.expect)
                    return fail("factor " + res.factor_str + ", expected " + fam.expect);
                return pass("factor " + res.factor_str);
            });
        }
    };
    if (ctx_.holo) run_family(*ctx_.holo, quarter_layout(cfg_.n), "holomorphic");
    run_family(*ctx_.real, ctx_.layout, "chart");

    if (cfg_.model == "real" || cfg_.model == "complex") {
        check("conformal/product-extension", "claim:conformal-factor-product", [&] {
            MetricModel prod = build_product_extension(*ctx_.real, 1, 1);
            BlockLayout layout = with_extension(ctx_.layout, dim, 2);
            HomothetySpec spec = make_phi_ab(layout, prod.dim());
            PullbackFactorResult res = pullback_factor(prod, spec);
            if (!res.is_homothety) return fail(res.witness);
            return outcome(res.factor_str == "s^2*t^2",
                           "product factor " + res.factor_str + " != s^2*t^2");
        });
    }
    check("conformal/essentiality", "claim:essential-certificate", [&] {
        HomothetySpec deck = make_phi_ab(ctx_.layout, dim);
        HomothetySpec phi0t = make_phi_0t(ctx_.layout, dim);
        EssentialityCertificate cert =
            essentiality_certificate(*ctx_.real, phi0t, {std::exp(cfg_.quotient_b)}, deck);
        if (!cert.certified) return fail(cert.note);
        if (!cert.commutes_with_deck) return fail("phi_0t does not commute with the deck map");
        return pass(cert.note);
    });
    check("conformal/isometry-not-certified", "claim:essential-certificate", [&] {
        HomothetySpec deck = make_phi_ab(ctx_.layout, dim);
        HomothetySpec psi = make_psi_t(ctx_.layout, dim);
        EssentialityCertificate cert = essentiality_certificate(
            *ctx_.real, psi, {std::exp(0.3), std::exp(-0.3)}, deck);
        return outcome(!cert.certified && !cert.proper_homothety,
                       "the factor-1 family must not be certified essential");
    });
    check("conformal/deck-not-certified", "claim:essential-certificate", [&] {
        HomothetySpec deck = make_phi_ab(ctx_.layout, dim);
        EssentialityCertificate cert = essentiality_certificate(
            *ctx_.real, deck, {std::exp(cfg_.quotient_a), std::exp(cfg_.quotient_b)}, deck);
        return outcome(!cert.certified && cert.proper_homothety && !cert.has_fixed_points,
                       "the fixed-point-free family must not be certified by this criterion");
    });
}

void Runner::suite_quotient() {
    if (!ctx_.quotient_applicable) {
        skip("quotient/all", "plumbing", "quotient machinery applies to the unextended models");
        return;
    }
    const double a = cfg_.quotient_a, b = cfg_.quotient_b;
    FundamentalDomain dom = make_domain(a, b, ctx_.layout, ctx_.chart_dim);
    const std::uint32_t d = ctx_.chart_dim;

    check("quotient/membership", "claim:fundamental-domain", [&] {
        std::vector<double> sphere_pt(d, 0.0);
        sphere_pt[0] = 1.0;
        if (domain_membership(dom, sphere_pt) != Membership::SphereBoundary)
            return fail("unit vector not classified as sphere boundary");
        std::vector<double> ell = dom.apply_deck(sphere_pt, 1);
        if (domain_membership(dom, ell) != Membership::EllipsoidBoundary)
            return fail("deck image of a sphere point not on the ellipsoid boundary");
        double lam_min = *std::min_element(dom.lambdas.begin(), dom.lambdas.end());
        std::vector<double> mid(d, 0.0);
        mid[0] = 0.5 * (1.0 + lam_min);
        if (domain_membership(dom, mid) != Membership::Interior)
            return fail("midpoint scaling not classified as interior");
        std::vector<double> tiny(d, 0.0);
        tiny[0] = 0.25;
        if (domain_membership(dom, tiny) != Membership::Outside)
            return fail("deep interior of the unit ball not classified as outside");
        return pass();
    });
    check("quotient/monotonicity", "claim:deck-monotonicity", [&] {
        double lam_min = *std::min_element(dom.lambdas.begin(), dom.lambdas.end());
        if (!(lam_min > 1.0)) return fail("minimal block scale does not exceed 1");
        Rng rng(cfg_.seed ^ 0xaa17u);
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<double> x = rng.double_vector(d, -2.0, 2.0);
            double s1 = dom.sphere_value(x);
            if (s1 == 0) continue;
            if (!(dom.sphere_value(dom.apply_deck(x, 1)) > s1))
                return fail("sphere quadric fails to grow along the deck map");
        }
        return pass();
    });
    check("quotient/representatives", "claim:canonical-representatives", [&] {
        Rng rng(cfg_.seed ^ 0x3b60u);
        int done = 0;
        while (done < 100) {
            std::vector<double> x = rng.double_vector(d, -3.0, 3.0);
            if (dom.sphere_value(x) < 1e-8) continue;
            ++done;
            Representative rep = canonical_representative(dom, x);
            double s1 = dom.sphere_value(rep.y);
            double s2 = dom.ellipsoid_value(rep.y);
            if (!(s1 >= 1.0 - 1e-10) || !(s2 < 1.0 + 1e-10))
                return fail("representative outside the half-open shell");
            // orbit invariance across deck powers
            for (long j = -3; j <= 3; ++j) {
                Representative rj = canonical_representative(dom, dom.apply_deck(x, j));
                if (rj.k != rep.k - j) return fail("representative power is not orbit-equivariant");
                for (std::uint32_t c = 0; c < d; ++c)
                    if (std::abs(rj.y[c] - rep.y[c]) > 1e-10 *
                            std::max(1.0, std::abs(rep.y[c])))
                        return fail("representative point is not orbit-invariant");
            }
        }
        return pass("100 seeded points, powers -3..3");
    });
    check("quotient/boundary-continuity", "claim:boundary-identification", [&] {
        Rng rng(cfg_.seed ^ 0x5e11u);
        const double eps = 1e-6;
        int done = 0;
        while (done < 20) {
            std::vector<double> dir = rng.double_vector(d, -1.0, 1.0);
            double norm = 0;
            for (double v : dir) norm += v * v;
            if (norm < 1e-6) continue;
            ++done;
            // scale to the ellipsoid boundary: s2(c*dir) = 1
            double s2 = dom.ellipsoid_value(dir);
            double scale = 1.0 / std::sqrt(s2);
            std::vector<double> inner(d), outer(d);
            for (std::uint32_t c = 0; c < d; ++c) {
                inner[c] = dir[c] * scale * (1.0 - eps);
                outer[c] = dir[c] * scale * (1.0 + eps);
            }
            QuotientChartPoint pi = quotient_chart(dom, inner);
            QuotientChartPoint po = quotient_chart(dom, outer);
            // angle wraps 1 -> 0 across the identification
            double wrap = std::min(std::abs(pi.angle - po.angle),
                                   1.0 - std::abs(pi.angle - po.angle));
            if (wrap > 1e-5)
                return fail("angle is discontinuous across the boundary (gap " +
                            std::to_string(wrap) + ")");
            for (std::uint32_t c = 0; c < d; ++c)
                if (std::abs(pi.sphere_point[c] - po.sphere_point[c]) > 1e-5)
                    return fail("sphere coordinate jumps across the identification");
        }
        return pass("20 boundary probes at eps = 1e-6");
    });
    check("quotient/chart-orbit-invariance", "claim:quotient-chart", [&] {
        Rng rng(cfg_.seed ^ 0x2ff4u);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<double> x = rng.double_vector(d, -2.0, 2.0);
            if (dom.sphere_value(x) < 1e-8) continue;
            QuotientChartPoint base = quotient_chart(dom, x);
            for (long j = -3; j <= 3; ++j) {
                QuotientChartPoint pj = quotient_chart(dom, dom.apply_deck(x, j));
                if (std::abs(pj.angle - base.angle) > 1e-9)
                    return fail("angle is not orbit-invariant");
                for (std::uint32_t c = 0; c < d; ++c)
                    if (std::abs(pj.sphere_point[c] - base.sphere_point[c]) > 1e-9)
                        return fail("sphere point is not orbit-invariant");
            }
        }
        return pass();
    });
}

void Runner::suite_complex_structure() {
    if (cfg_.model != "frances") {
        skip("complex-structure/all", "plumbing",
             "the complex-structure suite applies to the frances model");
        return;
    }
    HolonomySpan span = holonomy_span(*ctx_.real, *ctx_.riem);
    ComplexStructureReport rep = complex_structure_check(*ctx_.real, span);
    check("complex-structure/j-squares", "claim:complex-structure",
          [&] { return outcome(rep.j_squares_minus_one, "J^2 != -1"); });
    check("complex-structure/hermitian-g0", "claim:complex-structure", [&] {
        return outcome(rep.g0_hermitian, "g0(J.,J.) != g0");
    });
    check("complex-structure/hol-invariance", "claim:complex-structure", [&] {
        return outcome(rep.hol_invariant, "a holonomy element does not commute with J");
    });
    check("complex-structure/phi-j-noncommutation", "claim:complex-structure", [&] {
        return outcome(!rep.phi_ab_commutes_with_j,
                       "the diagonal family unexpectedly preserves J");
    });
}

}  // namespace

std::vector<CheckReport> run_suites(const RunConfig& cfg) {
    Runner r(cfg);
    try {
        return r.run();
    } catch (const std::exception& e) {
        CheckReport rep;
        rep.name = "setup/run";
        rep.anchor = "plumbing";
        rep.status = CheckStatus::Fail;
        rep.witness = std::string("exception: ") + e.what();
        return {rep};
    }
}

}  // namespace pkv
