#include "qhopf/presets.hpp"

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {

FieldElement Q(int k = 1) { return FieldElement::q_power(k); }
FieldElement one() { return FieldElement::one(); }
FieldElement fe(long n) { return FieldElement::from_int(n); }

/// mu - nu as a field element.
FieldElement mu_minus_nu() {
    return FieldElement::variable(Var::mu) - FieldElement::variable(Var::nu);
}

Tensor2 T2(const Presentation* P1, const Presentation* P2, const NcPoly& a, const NcPoly& b) {
    return tensor_product(P1->normal_form(a), P2->normal_form(b), SlotTag{P1, nullptr},
                          SlotTag{P2, nullptr});
}

}  // namespace

const char* preset_name_string(PresetName p) {
    switch (p) {
        case PresetName::plane: return "plane";
        case PresetName::glq2: return "glq2";
        case PresetName::suq2: return "suq2";
        case PresetName::sphere: return "sphere";
        case PresetName::sphere_mu_eq_nu: return "sphere_mu_eq_nu";
    }
    return "?";
}

std::optional<PresetName> preset_from_string(const std::string& s) {
    if (s == "plane") return PresetName::plane;
    if (s == "glq2") return PresetName::glq2;
    if (s == "suq2") return PresetName::suq2;
    if (s == "sphere") return PresetName::sphere;
    if (s == "sphere_mu_eq_nu" || s == "sphere-mu-eq-nu") return PresetName::sphere_mu_eq_nu;
    return std::nullopt;
}

const char* sphere_mode_string(SphereFieldMode m) { return m == SphereFieldMode::pq ? "pq" : "munu"; }

// ---------------------------------------------------------------------------
// plane: x y = q y x

static PresetBundle build_plane(FieldTag tag) {
    auto P = std::make_shared<Presentation>("plane", tag);
    GenId x = P->add_generator("x", 1, 1);
    GenId y = P->add_generator("y", 1, 1);
    P->add_rule(y, x, P->make_poly({{{{"x", 1}, {"y", 1}}, Q(-1)}}));
    P->finalize();
    return {P, nullptr};
}

// ---------------------------------------------------------------------------
// Quantum 2x2 matrices alpha..delta; normal words are beta^b (alpha^a|delta^d)
// gamma^e, so the mixed products alpha*delta and delta*alpha always sit
// adjациacent and rewrite away.

static void add_matrix_rules(Presentation& P, GenId a, GenId b, GenId g, GenId d, NcPoly ad_rhs,
                             NcPoly da_rhs) {
    P.add_rule(a, b, NcPoly::from_word(&P, Word::concat(Word::letter(b), Word::letter(a)), Q(1)));
    P.add_rule(d, b, NcPoly::from_word(&P, Word::concat(Word::letter(b), Word::letter(d)), Q(-1)));
    P.add_rule(g, b, NcPoly::from_word(&P, Word::concat(Word::letter(b), Word::letter(g)), one()));
    P.add_rule(g, a, NcPoly::from_word(&P, Word::concat(Word::letter(a), Word::letter(g)), Q(-1)));
    P.add_rule(g, d, NcPoly::from_word(&P, Word::concat(Word::letter(d), Word::letter(g)), Q(1)));
    P.add_rule(a, d, std::move(ad_rhs));
    P.add_rule(d, a, std::move(da_rhs));
}

static PresetBundle build_glq2(FieldTag tag) {
    auto P = std::make_shared<Presentation>("glq2", tag);
    GenId a = P->add_generator("alpha", 1, 2);
    GenId b = P->add_generator("beta", 1, 1);
    GenId g = P->add_generator("gamma", -1, 1);
    GenId d = P->add_generator("delta", -1, 2);
    GenId c = P->add_generator("c", 0, 0);
    GenId ci = P->add_generator("cinv", 0, 0, "c^-1");
    P->set_inverse_pair(c, ci);
    P->set_canonical_order({a, b, g, d, c, ci});
    P->set_termination_order({b, a, d, g, c, ci});

    NcPoly ad = P->make_poly({{{{"c", 1}}, one()}, {{{"beta", 1}, {"gamma", 1}}, Q(1)}});
    NcPoly da = P->make_poly({{{{"c", 1}}, one()}, {{{"beta", 1}, {"gamma", 1}}, Q(-1)}});
    add_matrix_rules(*P, a, b, g, d, std::move(ad), std::move(da));
    for (GenId u : {c, ci})
        for (GenId v : {a, b, g, d})
            P->add_rule(u, v, NcPoly::from_word(P.get(), Word::concat(Word::letter(v), Word::letter(u))));
    P->add_rule(c, ci, NcPoly::unit(P.get()));
    P->add_rule(ci, c, NcPoly::unit(P.get()));
    P->finalize();

    const Presentation* pp = P.get();
    auto W = [&](const char* n) { return NcPoly::from_word(pp, Word::letter(pp->gen(n))); };
    std::vector<Tensor2> delta = {
        T2(pp, pp, W("alpha"), W("alpha")) + T2(pp, pp, W("beta"), W("gamma")),
        T2(pp, pp, W("alpha"), W("beta")) + T2(pp, pp, W("beta"), W("delta")),
        T2(pp, pp, W("gamma"), W("alpha")) + T2(pp, pp, W("delta"), W("gamma")),
        T2(pp, pp, W("gamma"), W("beta")) + T2(pp, pp, W("delta"), W("delta")),
        T2(pp, pp, W("c"), W("c")),
        T2(pp, pp, W("cinv"), W("cinv")),
    };
    std::vector<FieldElement> eps = {one(), FieldElement::zero(), FieldElement::zero(), one(), one(), one()};
    std::vector<NcPoly> antipode = {
        pp->make_poly({{{{"delta", 1}, {"cinv", 1}}, one()}}),
        pp->make_poly({{{{"beta", 1}, {"cinv", 1}}, -Q(-1)}}),
        pp->make_poly({{{{"gamma", 1}, {"cinv", 1}}, -Q(1)}}),
        pp->make_poly({{{{"alpha", 1}, {"cinv", 1}}, one()}}),
        W("cinv"),
        W("c"),
    };
    auto hopf = std::make_shared<HopfStructure>(P, std::move(delta), std::move(eps), std::move(antipode));
    return {P, hopf};
}

static PresetBundle build_suq2(FieldTag tag) {
    auto P = std::make_shared<Presentation>("suq2", tag);
    GenId a = P->add_generator("alpha", 1, 2);
    GenId b = P->add_generator("beta", 1, 1);
    GenId g = P->add_generator("gamma", -1, 1);
    GenId d = P->add_generator("delta", -1, 2);
    // The quotient of the sphere construction keeps alpha^n and delta^n as
    // representatives, and the class of every mixed word involves both pure
    // powers: alpha^n and delta^n must undercut every word containing beta or
    // gamma at the same length.  A secondary canonical grading by beta/gamma
    // content arranges exactly that; the rewrite orientation is carried
    // separately by the termination weights.  Order data is fixed before any
    // polynomial is built over this alphabet.
    P->set_canonical_weight(b, 1);
    P->set_canonical_weight(g, 1);
    P->set_termination_order({b, a, d, g});

    NcPoly ad = P->make_poly({{{}, one()}, {{{"beta", 1}, {"gamma", 1}}, Q(1)}});
    NcPoly da = P->make_poly({{{}, one()}, {{{"beta", 1}, {"gamma", 1}}, Q(-1)}});
    add_matrix_rules(*P, a, b, g, d, std::move(ad), std::move(da));

    const Presentation* pp = P.get();
    std::vector<NcPoly> star = {
        NcPoly::from_word(pp, Word::letter(d)),
        NcPoly::from_word(pp, Word::letter(g), -Q(1)),
        NcPoly::from_word(pp, Word::letter(b), -Q(-1)),
        NcPoly::from_word(pp, Word::letter(a)),
    };
    P->set_involution(std::move(star));
    P->finalize();

    auto W = [&](const char* n) { return NcPoly::from_word(pp, Word::letter(pp->gen(n))); };
    std::vector<Tensor2> delta = {
        T2(pp, pp, W("alpha"), W("alpha")) + T2(pp, pp, W("beta"), W("gamma")),
        T2(pp, pp, W("alpha"), W("beta")) + T2(pp, pp, W("beta"), W("delta")),
        T2(pp, pp, W("gamma"), W("alpha")) + T2(pp, pp, W("delta"), W("gamma")),
        T2(pp, pp, W("gamma"), W("beta")) + T2(pp, pp, W("delta"), W("delta")),
    };
    std::vector<FieldElement> eps = {one(), FieldElement::zero(), FieldElement::zero(), one()};
    std::vector<NcPoly> antipode = {
        W("delta"),
        W("beta").scaled(-Q(-1)),
        W("gamma").scaled(-Q(1)),
        W("alpha"),
    };
    auto hopf = std::make_shared<HopfStructure>(P, std::move(delta), std::move(eps), std::move(antipode));
    return {P, hopf};
}

// ---------------------------------------------------------------------------
// Quantum spheres.  Normal words are z^b x^a and z^b y^c: z is pushed to the
// left so that a mixed x...y pair always becomes adjacent and rewrites into a
// polynomial in z.

static PresetBundle build_sphere_like(const char* name, FieldTag tag, const FieldElement& c0,
                                      const FieldElement& c1) {
    // x y = -q (c0 + c1 z - z^2),  y x = -q (c0 + c1 q^-2 z - q^-4 z^2)
    auto P = std::make_shared<Presentation>(name, tag);
    GenId x = P->add_generator("x", 2, 2);
    GenId z = P->add_generator("z", 0, 1);
    GenId y = P->add_generator("y", -2, 2);
    P->set_termination_order({z, x, y});

    auto zpoly = [&](const FieldElement& k0, const FieldElement& k1, const FieldElement& k2) {
        NcPoly r(P.get());
        r.add_term(Word::one(), k0);
        r.add_term(Word::letter(z), k1);
        r.add_term(Word::letter(z, 2), k2);
        return r;
    };
    P->add_rule(x, z, NcPoly::from_word(P.get(), Word::concat(Word::letter(z), Word::letter(x)), Q(2)));
    P->add_rule(y, z, NcPoly::from_word(P.get(), Word::concat(Word::letter(z), Word::letter(y)), Q(-2)));
    P->add_rule(x, y, zpoly(-Q(1) * c0, -Q(1) * c1, Q(1)));
    P->add_rule(y, x, zpoly(-Q(1) * c0, -Q(-1) * c1, Q(-3)));

    const Presentation* pp = P.get();
    std::vector<NcPoly> star = {
        NcPoly::from_word(pp, Word::letter(y), -Q(1)),
        NcPoly::from_word(pp, Word::letter(z)),
        NcPoly::from_word(pp, Word::letter(x), -Q(-1)),
    };
    P->set_involution(std::move(star));
    P->finalize();
    return {P, nullptr};
}

PresetBundle make_sphere_p() {
    return build_sphere_like("sphere_p", FieldTag::Qqp,
                             FieldElement::variable(Var::p, 2), one());
}

PresetBundle make_preset(PresetName name, std::optional<FieldTag> field) {
    switch (name) {
        case PresetName::plane:
            return build_plane(field.value_or(FieldTag::Qq));
        case PresetName::glq2:
            return build_glq2(field.value_or(FieldTag::Qq));
        case PresetName::suq2:
            return build_suq2(field.value_or(FieldTag::Qq));
        case PresetName::sphere:
            return build_sphere_like("sphere", field.value_or(FieldTag::QqMuNuT),
                                     FieldElement::variable(Var::mu) * FieldElement::variable(Var::nu),
                                     mu_minus_nu());
        case PresetName::sphere_mu_eq_nu:
            return build_sphere_like("sphere_mu_eq_nu", field.value_or(FieldTag::QqMu),
                                     FieldElement::variable(Var::mu, 2), FieldElement::zero());
    }
    throw domain_error("unknown preset");
}

PresetBundle make_cq2() {
    auto P = std::make_shared<Presentation>("cq2", FieldTag::Qq);
    GenId a = P->add_generator("a", 0, 0);
    GenId ai = P->add_generator("ainv", 0, 0, "a^-1");
    GenId b = P->add_generator("b", 0, 1);
    P->set_inverse_pair(a, ai);
    P->add_rule(b, a, NcPoly::from_word(P.get(), Word::concat(Word::letter(a), Word::letter(b)), Q(-2)));
    P->add_rule(b, ai, NcPoly::from_word(P.get(), Word::concat(Word::letter(ai), Word::letter(b)), Q(2)));
    P->add_rule(a, ai, NcPoly::unit(P.get()));
    P->add_rule(ai, a, NcPoly::unit(P.get()));
    P->finalize();

    const Presentation* pp = P.get();
    auto W = [&](GenId g) { return NcPoly::from_word(pp, Word::letter(g)); };
    std::vector<Tensor2> delta = {
        T2(pp, pp, W(a), W(a)),
        T2(pp, pp, W(ai), W(ai)),
        T2(pp, pp, NcPoly::unit(pp), W(b)) + T2(pp, pp, W(b), W(a)),
    };
    std::vector<FieldElement> eps = {one(), one(), FieldElement::zero()};
    std::vector<NcPoly> antipode = {
        W(ai),
        W(a),
        pp->normal_form(NcPoly::from_word(pp, Word::concat(Word::letter(b), Word::letter(ai)), -one())),
    };
    auto hopf = std::make_shared<HopfStructure>(P, std::move(delta), std::move(eps), std::move(antipode));
    return {P, hopf};
}

// ---------------------------------------------------------------------------
// Embedded spaces

EmbeddedSpace make_plane_space() {
    PresetBundle Bb = build_plane(FieldTag::Qq);
    PresetBundle Hb = build_glq2(FieldTag::Qq);
    const Presentation* B = Bb.pres.get();
    const Presentation* H = Hb.pres.get();
    auto HW = [&](const char* n) { return NcPoly::from_word(H, Word::letter(H->gen(n))); };
    auto BW = [&](const char* n) { return NcPoly::from_word(B, Word::letter(B->gen(n))); };

    std::vector<NcPoly> images = {HW("alpha"), HW("gamma")};
    std::vector<Tensor2> deltaL = {
        T2(H, B, HW("alpha"), BW("x")) + T2(H, B, HW("beta"), BW("y")),
        T2(H, B, HW("gamma"), BW("x")) + T2(H, B, HW("delta"), BW("y")),
    };
    Character kappa(Bb.pres, {one(), FieldElement::zero()});
    Embedding emb(Bb.pres, Hb.pres, images, deltaL);
    std::vector<NcPoly> gens;
    for (GenId g = 0; g < B->gen_count(); ++g)
        gens.push_back(H->normal_form(emb.image(g) - NcPoly::unit(H, kappa.value(g))));
    return {Bb.pres, Hb.pres, Hb.hopf, std::move(kappa), std::move(emb), std::move(gens)};
}

namespace {

/// Shared construction for the three sphere variants.  `scale` plays the
/// role of sqrt(mu nu) (t, p or mu) and `diff` the role of mu - nu (mu - nu,
/// 1 or 0); the coaction and images are the square-root-free forms obtained
/// by expanding the 3x3 matrix coaction in the unnormalized basis.
EmbeddedSpace make_sphere_space_impl(PresetBundle Bb, FieldTag htag, const FieldElement& scale,
                                     const FieldElement& diff) {
    PresetBundle Hb = build_suq2(htag);
    const Presentation* B = Bb.pres.get();
    const Presentation* H = Hb.pres.get();
    auto HP = [&](std::initializer_list<std::pair<std::vector<std::pair<const char*, int>>, FieldElement>>
                      t) { return H->normal_form(H->make_poly(t)); };
    auto BW = [&](const char* n) { return NcPoly::from_word(B, Word::letter(B->gen(n))); };

    // i(x) = scale (q a^2 - b^2) + diff a b           (a,b,g,d = alpha..delta)
    // i(z) = -scale (q a g - b d) - q diff b g
    // i(y) = scale (q g^2 - d^2) + diff g d
    NcPoly ix = HP({{{{"alpha", 2}}, Q(1) * scale},
                    {{{"beta", 2}}, -scale},
                    {{{"alpha", 1}, {"beta", 1}}, diff}});
    NcPoly iz = HP({{{{"alpha", 1}, {"gamma", 1}}, -Q(1) * scale},
                    {{{"beta", 1}, {"delta", 1}}, scale},
                    {{{"beta", 1}, {"gamma", 1}}, -Q(1) * diff}});
    NcPoly iy = HP({{{{"gamma", 2}}, Q(1) * scale},
                    {{{"delta", 2}}, -scale},
                    {{{"gamma", 1}, {"delta", 1}}, diff}});

    FieldElement one_pq2 = one() + Q(-2);  // 1 + q^-2
    FieldElement qpqi = Q(1) + Q(-1);      // q + q^-1

    Tensor2 dx = T2(H, B, HP({{{{"alpha", 2}}, one()}}), BW("x")) +
                 T2(H, B, HP({{{{"beta", 2}}, one()}}), BW("y")) +
                 T2(H, B, HP({{{{"alpha", 1}, {"beta", 1}}, diff}}), NcPoly::unit(B)) +
                 T2(H, B, HP({{{{"alpha", 1}, {"beta", 1}}, -one_pq2}}), BW("z"));
    Tensor2 dz = T2(H, B, NcPoly::unit(H), BW("z")) +
                 T2(H, B, HP({{{{"beta", 1}, {"gamma", 1}}, qpqi}}), BW("z")) +
                 T2(H, B, HP({{{{"alpha", 1}, {"gamma", 1}}, -one()}}), BW("x")) +
                 T2(H, B, HP({{{{"beta", 1}, {"delta", 1}}, -one()}}), BW("y")) +
                 T2(H, B, HP({{{{"beta", 1}, {"gamma", 1}}, -Q(1) * diff}}), NcPoly::unit(B));
    Tensor2 dy = T2(H, B, HP({{{{"gamma", 2}}, one()}}), BW("x")) +
                 T2(H, B, HP({{{{"delta", 2}}, one()}}), BW("y")) +
                 T2(H, B, HP({{{{"gamma", 1}, {"delta", 1}}, diff}}), NcPoly::unit(B)) +
                 T2(H, B, HP({{{{"gamma", 1}, {"delta", 1}}, -one_pq2}}), BW("z"));

    // generator order in the sphere presentations is x, z, y
    std::vector<NcPoly> images = {ix, iz, iy};
    std::vector<Tensor2> deltaL = {dx, dz, dy};
    Character kappa(Bb.pres, {Q(1) * scale, FieldElement::zero(), -scale});
    Embedding emb(Bb.pres, Hb.pres, images, deltaL);
    std::vector<NcPoly> gens;
    for (GenId g = 0; g < B->gen_count(); ++g)
        gens.push_back(H->normal_form(emb.image(g) - NcPoly::unit(H, kappa.value(g))));
    return {Bb.pres, Hb.pres, Hb.hopf, std::move(kappa), std::move(emb), std::move(gens)};
}

}  // namespace

EmbeddedSpace make_sphere_space(SphereFieldMode mode) {
    if (mode == SphereFieldMode::pq) {
        return make_sphere_space_impl(make_sphere_p(), FieldTag::Qqp, FieldElement::variable(Var::p),
                                      one());
    }
    return make_sphere_space_impl(make_preset(PresetName::sphere), FieldTag::QqMuNuT,
                                  FieldElement::t(), mu_minus_nu());
}

EmbeddedSpace make_sphere_mu_eq_nu_space() {
    return make_sphere_space_impl(make_preset(PresetName::sphere_mu_eq_nu), FieldTag::QqMu,
                                  FieldElement::variable(Var::mu), FieldElement::zero());
}

}  // namespace qhopf
