//! Reference values for the `paper-report` subcommand, one row per
//! headline number. `anchor` names the step of the computation the value
//! belongs to.

pub struct Expected {
    pub name: &'static str,
    pub value: &'static str,
    pub anchor: &'static str,
}

const fn row(name: &'static str, value: &'static str, anchor: &'static str) -> Expected {
    Expected { name, value, anchor }
}

pub const EXPECTED: &[Expected] = &[
    row("rho(15,4,16)", "0", "finitely many g^4_16 on a general genus-15 curve"),
    row("rho(15,5,16)", "-9", "ρ(g, r+1, d) = -(g - d + 2(r+1))"),
    row("rho(15,4,15)", "-5", "ρ(g, r, d-1) = -(r+1)"),
    row("count(15,4,16)", "6006", "degree N of the cover of linear series"),
    row("h0(L^2)", "18", "dimensions 15 and 18 of the multiplication map"),
    row("balance(15,4,16,2)", "18/18", "morphism of vector bundles of the same rank"),
    row("balance(15,4,16,4)", "25/18", "h0(L⊗η) = 4 on Wirtinger covers"),
    row("delta0pp_jump(4)", "4,2,2", "h0(L⊗η) jumps by two along Δ0''"),
    row("pullback(δ0)", "δ0' + δ0'' + 2*δ0ram", "simple ramification over Δ0ram"),
    row("pullback(λ)", "λ", "λ denotes the pullback of the Hodge class"),
    row("pushforward(δ0'')", "δ0", "pushforward relations"),
    row("pushforward(δ0ram)", "268435456*δ0", "pushforward relations, 2^(2g-2)"),
    row("pushforward(δ0')", "536870910*δ0", "pushforward relations, 2(2^(2g-2) - 1)"),
    row("deg(π)", "1073741823", "π has degree 2^(2g) - 1"),
    row("K.λ", "13", "canonical class of the Prym moduli space"),
    row("K.δ0'", "-2", "canonical class of the Prym moduli space"),
    row("K.δ0ram", "-3", "canonical class of the Prym moduli space"),
    row("census.d0pp", "1", "exactly one Wirtinger structure"),
    row("ch(L^2)", "1 + 2*cL + 2*cL^2", "expansion of ch(L⊗²)"),
    row("todd.cω", "-1/2", "relative Todd class"),
    row("todd.c2Ω", "1/12", "relative Todd class"),
    row("push((cω^2 + c2Ω)/12)", "λ", "Mumford's formula"),
    row("push(cP^2)", "-1/2*δ0ram", "pushforward of c1(P)^2 along the universal Prym curve"),
    row("c1(χ*(L^2))", "λ + 2*a - b", "GRR for L⊗², no R¹"),
    row("c1(χ*(L⊗P))", "λ + 1/2*a - 1/2*b + d - 1/4*δ0ram", "GRR for L⊗P with R¹ correction"),
    row("c1(Sym2 χ*L)", "6*c", "c1(Sym²G) = (rk G + 1) c1(G), rank 5"),
    row(
        "c1(Sym2 χ*(L⊗P))",
        "3*λ + 3/2*a - 3/2*b + 3*d - 3/4*δ0ram",
        "c1(Sym²G) for the rank-2 bundle",
    ),
    row("Z1.λ", "-2", "detailed Porteous calculation"),
    row("Z1.δ0ram", "3/4", "detailed Porteous calculation"),
    row("Z1.d", "-3", "the -3σ*(d) term of the virtual class"),
    row("σ*(a)", "-146784*λ + 20856*δ0' + 20856*δ0'' + 41712*δ0ram", "σ-pushforward table"),
    row("σ*(b)", "4224*λ + 264*δ0' + 264*δ0'' + 528*δ0ram", "σ-pushforward table"),
    row("σ*(c)", "-48279*λ + 6930*δ0' + 6930*δ0'' + 13860*δ0ram", "σ-pushforward table"),
    row("σ*(λ)", "6006*λ", "σ*(λ) = Nλ"),
    row("σ*(δ0ram)", "6006*δ0ram", "σ*(δ0ram) = Nδ0ram"),
    row(
        "[D15]virt",
        "206382*λ - 31020*δ0' - 31020*δ0'' - 115071/2*δ0ram - 3*σ*(d)",
        "virtual class of the degeneracy divisor, expanded",
    ),
    row(
        "[D15]virt factored",
        "31020*(3127/470*λ - (δ0' + δ0'') - 3487/1880*δ0ram) - 3*σ*(d)",
        "virtual class of the degeneracy divisor",
    ),
    row("P_S(t)", "7*t^2 - 7*t + 7", "Hilbert polynomial of the Pfaffian surface"),
    row("deg S", "14", "Pfaffian surface"),
    row("χ(O_S)", "7", "Pfaffian surface"),
    row("p_g", "6", "Pfaffian surface"),
    row("q", "0", "Pfaffian surface is regular"),
    row("K_S^2", "14", "Pfaffian surface is canonically embedded"),
    row("h0(I_S(1))", "0", "p_g = 6 from h0(O_P5(1))"),
    row("h0(O_S(1))", "6", "p_g = 6"),
    row("h0(I_S(2))", "0", "S lies on no quadric"),
    row("h0(O_S(2))", "21", "h0(ω_S⊗²) by Riemann-Roch"),
    row("adjunction(14)", "15,14", "hyperplane section of genus 15 and degree 14"),
    row("2g-2 of section", "28", "2g - 2 = 2K_S·K_S"),
    row("slope D15:2 δ0'", "44/7", "[D15:2] = 924(44/7 λ - ...)"),
    row("slope D15:2 δ0ram", "88/15", "[D15:2] = 924(... - 15/14 δ0ram)"),
    row("slope D15 δ0'", "3127/470", "factored virtual class"),
    row("β", "667/680394", "final combination"),
    row("γ", "4/113399", "final combination"),
    row("ε", "10288/793", "final combination"),
    row("verdict", "true", "ε < 13, the canonical class is big"),
];
