#include "conformal.hpp"

#include <algorithm>
#include <cmath>

namespace pkv {

BlockLayout quarter_layout(std::uint32_t n) {
    BlockLayout l;
    for (std::uint32_t b = 0; b < 4; ++b)
        for (std::uint32_t k = 0; k < n; ++k) l.blocks[b].push_back(b * n + k);
    return l;
}

BlockLayout realified_layout(std::uint32_t n) {
    BlockLayout l;
    for (std::uint32_t b = 0; b < 4; ++b)
        for (std::uint32_t k = 0; k < n; ++k) {
            l.blocks[b].push_back(b * n + k);             // x-copy
            l.blocks[b].push_back(4 * n + b * n + k);     // y-copy
        }
    return l;
}

BlockLayout with_extension(BlockLayout layout, std::uint32_t base_dim, std::uint32_t ext) {
    for (std::uint32_t k = 0; k < ext; ++k) layout.extension.push_back(base_dim + k);
    return layout;
}

std::string HomothetySpec::scale_str(const Monomial& m) const {
    std::string s;
    for (std::uint32_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += symbols[v];
        if (m[v] > 1) s += "^" + std::to_string(int(m[v]));
    }
    return s.empty() ? "1" : s;
}

std::vector<double> HomothetySpec::numeric_scales(const std::vector<double>& vals) const {
    if (vals.size() != symbols.size())
        throw std::invalid_argument("symbol value count mismatch");
    std::vector<double> out;
    out.reserve(coord_scales.size());
    for (const Monomial& m : coord_scales) {
        double s = 1;
        for (std::uint32_t v = 0; v < m.size(); ++v)
            for (std::uint8_t e = 0; e < m[v]; ++e) s *= vals[v];
        out.push_back(s);
    }
    return out;
}

namespace {

Monomial mono(std::size_t nsym, std::initializer_list<std::pair<std::uint32_t, std::uint8_t>> es) {
    Monomial m(nsym, 0);
    for (auto [v, e] : es) m[v] = e;
    return m;
}

HomothetySpec from_block_scales(const BlockLayout& layout, std::uint32_t dim,
                                std::vector<std::string> symbols,
                                const std::array<Monomial, 4>& block_scales,
                                const Monomial& ext_scale, const Monomial& factor,
                                HomothetyFamily fam, std::string name) {
    HomothetySpec spec;
    spec.family = fam;
    spec.name = std::move(name);
    spec.symbols = std::move(symbols);
    spec.coord_scales.assign(dim, Monomial(spec.symbols.size(), 0));
    for (std::uint32_t b = 0; b < 4; ++b)
        for (std::uint32_t c : layout.blocks[b]) spec.coord_scales[c] = block_scales[b];
    for (std::uint32_t c : layout.extension) spec.coord_scales[c] = ext_scale;
    spec.claimed_factor = factor;
    return spec;
}

}  // namespace

HomothetySpec make_identity(const BlockLayout& layout, std::uint32_t dim) {
    return from_block_scales(layout, dim, {},
                             {Monomial{}, Monomial{}, Monomial{}, Monomial{}}, Monomial{},
                             Monomial{}, HomothetyFamily::Identity, "identity");
}

HomothetySpec make_phi_ab(const BlockLayout& layout, std::uint32_t dim) {
    // blocks (s, t, s t^2, s^2 t), extension s t, factor (s t)^2
    return from_block_scales(
        layout, dim, {"s", "t"},
        {mono(2, {{0, 1}}), mono(2, {{1, 1}}), mono(2, {{0, 1}, {1, 2}}),
         mono(2, {{0, 2}, {1, 1}})},
        mono(2, {{0, 1}, {1, 1}}), mono(2, {{0, 2}, {1, 2}}), HomothetyFamily::PhiAB,
        "phi_ab");
}

HomothetySpec make_phi_s(const BlockLayout& layout, std::uint32_t dim) {
    return from_block_scales(layout, dim, {"r"},
                             {mono(1, {{0, 1}}), mono(1, {{0, 1}}), mono(1, {{0, 3}}),
                              mono(1, {{0, 3}})},
                             mono(1, {{0, 2}}), mono(1, {{0, 4}}), HomothetyFamily::PhiS,
                             "phi_s");
}

HomothetySpec make_psi_t(const BlockLayout& layout, std::uint32_t dim) {
    HomothetySpec spec = from_block_scales(
        layout, dim, {"u", "v"},
        {mono(2, {{0, 1}}), mono(2, {{1, 1}}), mono(2, {{1, 1}}), mono(2, {{0, 1}})},
        Monomial(2, 0), Monomial(2, 0), HomothetyFamily::PsiT, "psi_t");
    spec.inverse_pairs = {{0, 1}};
    return spec;
}

HomothetySpec make_phi_0t(const BlockLayout& layout, std::uint32_t dim) {
    return from_block_scales(layout, dim, {"u"},
                             {Monomial(1, 0), mono(1, {{0, 1}}), mono(1, {{0, 2}}),
                              mono(1, {{0, 1}})},
                             Monomial(1, 0), mono(1, {{0, 2}}), HomothetyFamily::Phi0T,
                             "phi_0t");
}

MultiPoly laurent_reduce(const MultiPoly& p, std::uint32_t first_symbol_var,
                         const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
    if (pairs.empty()) return p;
    MultiPoly out(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        Monomial red = m;
        for (const auto& [u, v] : pairs) {
            std::uint8_t& eu = red[first_symbol_var + u];
            std::uint8_t& ev = red[first_symbol_var + v];
            std::uint8_t k = std::min(eu, ev);
            eu -= k;
            ev -= k;
        }
        out.add_term(red, c);
    }
    return out;
}

PullbackFactorResult pullback_factor(const MetricModel& m, const HomothetySpec& spec) {
    const ChartPtr& chart = m.chart();
    const std::uint32_t d = m.dim();
    if (spec.coord_scales.size() != d)
        throw std::invalid_argument("homothety layout does not match the chart dimension");
    const std::uint32_t base_nv = chart->nvars();
    const std::uint32_t nsym = static_cast<std::uint32_t>(spec.symbols.size());
    const std::uint32_t nv = base_nv + nsym;

    // Extended ring: chart variables then scale symbols.
    std::vector<std::uint32_t> embed_map(base_nv);
    for (std::uint32_t v = 0; v < base_nv; ++v) embed_map[v] = v;
    auto symbol_monomial = [&](const Monomial& scale) {
        Monomial full(nv, 0);
        for (std::uint32_t sidx = 0; sidx < nsym; ++sidx) full[base_nv + sidx] = scale[sidx];
        return full;
    };

    // Coordinate images: x^A -> scale_A * x^A (w-block picks the same scale;
    // the symbols stand for positive reals).
    std::vector<MultiPoly> images(nv, MultiPoly(nv));
    for (std::uint32_t v = 0; v < nv; ++v) images[v] = MultiPoly::variable(nv, v);
    for (std::uint32_t a = 0; a < d; ++a) {
        Monomial scale = symbol_monomial(spec.coord_scales[a]);
        {
            Monomial mv = scale;
            mv[chart->coord_var(a)] = 1;
            MultiPoly img(nv);
            img.add_term(mv, GaussianRational(1));
            images[chart->coord_var(a)] = img;
        }
        if (!chart->is_real()) {
            Monomial mv = scale;
            mv[chart->conj_coord_var(a)] = 1;
            MultiPoly img(nv);
            img.add_term(mv, GaussianRational(1));
            images[chart->conj_coord_var(a)] = img;
        }
    }

    auto pulled_component = [&](std::uint32_t a, std::uint32_t b) {
        // (phi*g)_{AB} = scale_A scale_B g_{AB}(phi x)
        MultiPoly g_ext = m.g().at(a, b).embed(nv, embed_map);
        MultiPoly sub = g_ext.compose(images, nv);
        Monomial pre = symbol_monomial(spec.coord_scales[a]);
        const Monomial sb = symbol_monomial(spec.coord_scales[b]);
        for (std::uint32_t v = 0; v < nv; ++v) pre[v] = pre[v] + sb[v];
        MultiPoly prefactor(nv);
        prefactor.add_term(pre, GaussianRational(1));
        return prefactor * sub;
    };

    PullbackFactorResult res;
    const Monomial factor = symbol_monomial(spec.claimed_factor);
    bool have_factor = true;
    for (std::uint32_t a = 0; a < d && have_factor; ++a) {
        for (std::uint32_t b = 0; b < d; ++b) {
            const MultiPoly& base = m.g().at(a, b);
            if (base.is_zero()) {
                if (!laurent_reduce(pulled_component(a, b), base_nv, spec.inverse_pairs)
                         .is_zero()) {
                    res.witness = "component (" + std::to_string(a + 1) + "," +
                                  std::to_string(b + 1) + ") is nonzero after pullback";
                    have_factor = false;
                    break;
                }
                continue;
            }
            MultiPoly lhs = pulled_component(a, b);
            MultiPoly rhs(nv);
            for (const auto& [mm, cc] : base.embed(nv, embed_map).terms()) {
                Monomial scaled = mm;
                for (std::uint32_t v = 0; v < nv; ++v) scaled[v] = scaled[v] + factor[v];
                rhs.add_term(scaled, cc);
            }
            MultiPoly diff = laurent_reduce(lhs - rhs, base_nv, spec.inverse_pairs);
            if (!diff.is_zero()) {
                res.witness = "component (" + std::to_string(a + 1) + "," +
                              std::to_string(b + 1) + ") fails phi*g = " +
                              spec.scale_str(spec.claimed_factor) + " * g";
                have_factor = false;
                break;
            }
        }
    }
    if (have_factor) {
        res.is_homothety = true;
        res.factor = spec.claimed_factor;
        res.factor_str = spec.scale_str(spec.claimed_factor);
    }
    return res;
}

FixedPointSet fixed_point_set(const HomothetySpec& spec,
                              const std::vector<double>& symbol_values, double tol) {
    FixedPointSet fs;
    std::vector<double> scales = spec.numeric_scales(symbol_values);
    for (std::uint32_t c = 0; c < scales.size(); ++c)
        if (std::abs(scales[c] - 1.0) <= tol) fs.fixed_coords.push_back(c);
    fs.dim = fs.fixed_coords.size();
    fs.meets_punctured_space = fs.dim > 0;
    return fs;
}

EssentialityCertificate essentiality_certificate(const MetricModel& m,
                                                 const HomothetySpec& spec,
                                                 const std::vector<double>& symbol_values,
                                                 const HomothetySpec& deck) {
    EssentialityCertificate cert;
    PullbackFactorResult factor = pullback_factor(m, spec);
    if (!factor.is_homothety) {
        cert.note = "pullback is not a constant multiple of g: " + factor.witness;
        return cert;
    }
    bool factor_is_one = std::all_of(factor.factor.begin(), factor.factor.end(),
                                     [](std::uint8_t e) { return e == 0; });
    // A nonconstant monomial factor gives a proper homothety for generic
    // parameter values; confirm numerically at the supplied values.
    double numeric_factor = 1;
    for (std::uint32_t v = 0; v < factor.factor.size(); ++v)
        for (std::uint8_t e = 0; e < factor.factor[v]; ++e)
            numeric_factor *= symbol_values[v];
    cert.proper_homothety = !factor_is_one && std::abs(numeric_factor - 1.0) > 1e-12;

    FixedPointSet fs = fixed_point_set(spec, symbol_values);
    cert.has_fixed_points = fs.meets_punctured_space;

    // Commutation with the deck transformation: both maps are diagonal with
    // monomial entries over the joined symbol list, so compare the products
    // entry by entry.
    cert.commutes_with_deck = spec.coord_scales.size() == deck.coord_scales.size();
    if (cert.commutes_with_deck) {
        for (std::size_t c = 0; c < spec.coord_scales.size(); ++c) {
            // joined exponents: (spec, deck) and (deck, spec) must agree
            Monomial ab(spec.symbols.size() + deck.symbols.size(), 0);
            Monomial ba = ab;
            for (std::uint32_t v = 0; v < spec.coord_scales[c].size(); ++v) {
                ab[v] += spec.coord_scales[c][v];
                ba[v] += spec.coord_scales[c][v];
            }
            for (std::uint32_t v = 0; v < deck.coord_scales[c].size(); ++v) {
                ab[spec.symbols.size() + v] += deck.coord_scales[c][v];
                ba[spec.symbols.size() + v] += deck.coord_scales[c][v];
            }
            if (ab != ba) cert.commutes_with_deck = false;
        }
    }

    cert.certified = cert.proper_homothety && cert.has_fixed_points;
    if (cert.certified) {
        cert.note = "proper homothety (factor " + factor.factor_str +
                    ") with fixed points away from the origin: essential; commutes with the "
                    "deck generator, hence descends to the quotient";
    } else if (!cert.proper_homothety) {
        cert.note = "factor 1 at these parameters: an isometry, not a proper homothety; "
                    "the criterion does not apply";
    } else {
        cert.note = "no fixed points in the punctured space; the criterion does not apply "
                    "(inessentiality is not concluded)";
    }
    return cert;
}

}  // namespace pkv
