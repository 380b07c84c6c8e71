//! The entry table, sorted by id.

use super::params::ParamSpec;
use super::report::Mode;
use super::{classical, groups, hall, isoclinism, lattice, qident, IdentityEntry};

const EXACT_PRIMES: &[u64] = &[2, 3, 5];
const SMALL_PRIMES: &[u64] = &[2, 3];

const NO_PARAMS: &[ParamSpec] = &[];

macro_rules! entry {
    ($id:literal, $mode:ident, $build:path, $statement:literal,
     params: $params:expr, primes: $primes:expr, degree: $deg:literal..=$max:literal, numeric: $numeric:literal) => {
        IdentityEntry {
            id: $id,
            mode: Mode::$mode,
            statement: $statement,
            params: $params,
            uses_primes: !<[u64]>::is_empty($primes),
            default_primes: $primes,
            default_degree: $deg,
            max_degree: $max,
            numeric: $numeric,
            build: $build,
        }
    };
}

pub(super) static ENTRIES: &[IdentityEntry] = &[
    entry!("ag_23", Formal, qident::ag_23,
        "Andrews–Gordon: Σ x^{Σk_j² + k_i+…+k_r}/(f_{k1−k2}…f_{kr}) = Π_{j ≢ 0,±i mod 2r+3} 1/(1 − x^j)",
        params: &[
            ParamSpec::int("r", 1, 6, (1, 4), "number of summation indices"),
            ParamSpec::int("i", 1, 7, (1, 7), "offset, 1 ≤ i ≤ r+1"),
        ],
        primes: &[], degree: 80..=150, numeric: true),
    entry!("agl_25", FormalExact, classical::agl_25,
        "Σ_k 1/|AGL(k,q)| as the second Rogers–Ramanujan product at x = 1/q",
        params: NO_PARAMS, primes: EXACT_PRIMES, degree: 60..=200, numeric: true),
    entry!("aut_35", Exact, groups::aut_35,
        "|Aut(G)| from the Pochhammer form equals the endomorphism count for small abelian p-groups",
        params: NO_PARAMS, primes: SMALL_PRIMES, degree: 1..=1000, numeric: false),
    entry!("cor9_18", Exact, lattice::cor9_18,
        "rank-2 class-2 mass p²(2p⁴−1)/((p−1)⁵(p+1)³(p²+1)) via the normal zeta function",
        params: NO_PARAMS, primes: EXACT_PRIMES, degree: 1..=1000, numeric: false),
    entry!("eq12", Formal, hall::eq12,
        "Σ_{G ∈ A_{k+1}, λ_1 = n} 1/|G| = Σ_{|G| = p^n} |G|^{−k}/|Aut(G)|",
        params: &[
            ParamSpec::int("k", 1, 4, (1, 3), "rectangle offset"),
            ParamSpec::int("n", 1, 8, (1, 6), "largest part"),
        ],
        primes: &[], degree: 40..=60, numeric: false),
    entry!("eq9", Formal, hall::eq9,
        "Σ_{rank G = n} 1/|Aut(G)| = x^{n²}/f_n²",
        params: &[ParamSpec::int("n", 0, 10, (0, 6), "rank")],
        primes: &[], degree: 40..=100, numeric: false),
    entry!("eq9_Y", Formal, hall::eq9_y,
        "Σ_{G ∈ Y_{p,n}} 1/|G| = x^{n²}/f_n² = Σ_{rank G = n} 1/|Aut(G)|",
        params: &[ParamSpec::int("n", 0, 7, (0, 4), "Durfee side")],
        primes: &[], degree: 40..=60, numeric: false),
    entry!("gl_24", FormalExact, classical::gl_24,
        "Σ_k 1/|GL(k,q)| as the first Rogers–Ramanujan product at x = 1/q",
        params: NO_PARAMS, primes: EXACT_PRIMES, degree: 60..=200, numeric: true),
    entry!("gu_24m", FormalExact, classical::gu_24m,
        "the general linear series at x = −1/q gives (−1)^k/|GU(k,q)|",
        params: NO_PARAMS, primes: EXACT_PRIMES, degree: 60..=200, numeric: false),
    entry!("hall_5", Formal, hall::hall_5,
        "Σ_G 1/|G| = Σ_G 1/|Aut(G)| over abelian p-groups",
        params: NO_PARAMS, primes: &[], degree: 40..=60, numeric: true),
    entry!("hall_6", Formal, hall::hall_6,
        "Σ_G 1/|Aut(G)| = Σ π(n)/pⁿ",
        params: NO_PARAMS, primes: &[], degree: 40..=200, numeric: true),
    entry!("hall_7", Formal, hall::hall_7,
        "partitions with largest part n, partitions into exactly n parts, and Σ_{|G|=p^n} 1/|Aut(G)|",
        params: &[ParamSpec::int("n", 0, 12, (1, 8), "largest part")],
        primes: &[], degree: 30..=60, numeric: false),
    entry!("hall_8", Formal, hall::hall_8,
        "Σ_{H ∈ S_G} 1/|H| = 1/|Aut(G)| for Hall's family S_G",
        params: &[ParamSpec::partition("lambda", 8, 4, "type of G, e.g. 2,1")],
        primes: &[], degree: 30..=60, numeric: true),
    entry!("o_26", Diagnostic, classical::o_26,
        "orthogonal groups in odd dimension against the first product at x = 1/q²",
        params: NO_PARAMS, primes: EXACT_PRIMES, degree: 60..=200, numeric: false),
    entry!("o_27", Diagnostic, classical::o_27,
        "orthogonal groups O^ε(2k,q) against the first product at x = 1/q²",
        params: &[ParamSpec::choice("eps", &["plus", "minus"], "sign ε")],
        primes: EXACT_PRIMES, degree: 60..=200, numeric: false),
    entry!("orders_forms", Exact, classical::orders_forms,
        "closed-form classical group orders against their reciprocal series forms and matrix counts",
        params: NO_PARAMS, primes: EXACT_PRIMES, degree: 1..=1000, numeric: false),
    entry!("pi_r_gf", Formal, qident::pi_r_gf,
        "Σ π_r(n)xⁿ = 1/f_r",
        params: &[ParamSpec::int("r", 0, 10, (0, 5), "bound on the number of parts")],
        primes: &[], degree: 40..=60, numeric: false),
    entry!("prop12_19", Formal, qident::prop12_19,
        "Σ_{s≥1} x^{s(s+r)}/(f_{s+r}f_s) = Σ π^(r)(n)xⁿ",
        params: &[ParamSpec::int("r", 0, 10, (0, 5), "excess number of parts")],
        primes: &[], degree: 60..=200, numeric: true),
    entry!("prop13_abelian", Exact, lattice::prop13_abelian,
        "abelian masses by rank through the mass bridge give ζ_{Z^d}(d)",
        params: &[ParamSpec::int("d", 1, 4, (1, 3), "rank")],
        primes: EXACT_PRIMES, degree: 1..=1000, numeric: false),
    entry!("rr_21", Formal, qident::rr_21,
        "Σ x^{k²}/f_k = Π_{j ≡ ±1 mod 5} 1/(1 − x^j)",
        params: NO_PARAMS, primes: &[], degree: 60..=400, numeric: true),
    entry!("rr_22", Formal, qident::rr_22,
        "Σ x^{k²+k}/f_k = Π_{j ≡ ±2 mod 5} 1/(1 − x^j)",
        params: NO_PARAMS, primes: &[], degree: 60..=400, numeric: true),
    entry!("sG_rect", Formal, hall::sg_rect,
        "|G|^k/|Aut(G)| = Σ_{H ∈ S^G} 1/|H| for G ∈ A_{k+1}",
        params: &[
            ParamSpec::int("k", 1, 4, (1, 3), "rectangle offset"),
            ParamSpec::partition("lambda", 8, 6, "type of G, e.g. 2,2"),
        ],
        primes: &[], degree: 30..=60, numeric: false),
    entry!("s_degree", Exact, lattice::s_degree,
        "s(n) equals the number of subspaces of F_p^n and has degree ⌊n²/4⌋ in p",
        params: &[ParamSpec::int("n", 0, 10, (0, 8), "dimension")],
        primes: SMALL_PRIMES, degree: 1..=1000, numeric: false),
    entry!("thm14_28", FormalExact, isoclinism::thm14_28,
        "Σ_{|G'|=p} |G:Z(G)|^{1/2}/|Aut(G)| = A·x/(1−x)·(Π_{±1 mod 5}(x²) − 1)",
        params: NO_PARAMS, primes: &[], degree: 60..=150, numeric: true),
    entry!("thm14_29", FormalExact, isoclinism::thm14_29,
        "Σ_{|G'|=p} |G:Z(G)|^{−1/2}/|Aut(G)| = A·x/(1−x)·(Π_{±2 mod 5}(x²) − 1)",
        params: NO_PARAMS, primes: &[], degree: 60..=150, numeric: true),
    entry!("thm14_38", FormalExact, isoclinism::thm14_38,
        "p^r/|GSp(2r,p)| = (x/(1−x))·x^{2r²}/f_r(x²)",
        params: &[ParamSpec::int("r", 1, 6, (1, 4), "half the dimension")],
        primes: EXACT_PRIMES, degree: 60..=150, numeric: false),
    entry!("thm15_30", FormalExact, isoclinism::thm15_30,
        "A + A·Σ_{d≥2} 1/|GL(d,p)| = A·(Π_{±1 mod 5} − x/(1−x))",
        params: NO_PARAMS, primes: EXACT_PRIMES, degree: 60..=150, numeric: true),
    entry!("thm16_31", Diagnostic, isoclinism::thm16_31,
        "Σ 1/|Out(G)| over the families T^d against A·Π_{±2 mod 5}/(1−x)",
        params: NO_PARAMS, primes: EXACT_PRIMES, degree: 60..=150, numeric: false),
    entry!("thm16_32", Diagnostic, isoclinism::thm16_32,
        "Σ |G:Z(G)|/|Out(G)| over the families T^d against A·x^{−2}Π_{±1 mod 5}/(1−x)",
        params: NO_PARAMS, primes: EXACT_PRIMES, degree: 60..=150, numeric: false),
    entry!("thm17_33", FormalExact, isoclinism::thm17_33,
        "Σ |G'|/|Aut(G)| over the families S^d = A·(Π_{±2 mod 5} − x²/(1−x))",
        params: NO_PARAMS, primes: EXACT_PRIMES, degree: 60..=150, numeric: true),
    entry!("thm17_34", FormalExact, isoclinism::thm17_34,
        "Σ |G'||G:Z(G)|^{1/2}/|Aut(G)| over the families S^d = A·(Π_{±1 mod 5} − x/(1−x))",
        params: NO_PARAMS, primes: EXACT_PRIMES, degree: 60..=150, numeric: true),
    entry!("thm1_covering", Exact, groups::thm1_covering,
        "Σ 1/|Aut(H_i)| over the covering groups H_i of G equals 1/|Aut(G)|",
        params: &[ParamSpec::choice("case", groups::COVERING_CASES, "shipped case")],
        primes: &[], degree: 1..=1000, numeric: false),
    entry!("thm3_10", Formal, hall::thm3_10,
        "capable groups: Σ 1/|G| = (1 − x)Σπ(n)xⁿ = Σ 1/|Hol(G)|",
        params: NO_PARAMS, primes: &[], degree: 40..=60, numeric: true),
    entry!("thm4_11", Formal, hall::thm4_11,
        "Σ_{A_{k+1}} 1/|G| = Σ_{B_{k+1}} 1/|G| = Σ |G|^{−k}/|Aut(G)| = f_k·Σπ(n)xⁿ",
        params: &[ParamSpec::int("k", 1, 6, (1, 4), "offset")],
        primes: &[], degree: 40..=60, numeric: false),
    entry!("thm5_13_sum", Formal, isoclinism::thm5_13_sum,
        "Σ_{s≥0} Z_{Z^{r+s}}·x^{rs}/|GL(s)| = Σ π(n)xⁿ",
        params: &[ParamSpec::int("r", 0, 8, (0, 5), "rank of the centre quotient part")],
        primes: &[], degree: 60..=150, numeric: true),
    entry!("thm5_36_37", Formal, isoclinism::thm5_36_37,
        "Z_{Z^d}·x^{(d−s)s}/|GL(s)| = x^{ds}/(f_d f_s)",
        params: &[
            ParamSpec::int("d", 1, 8, (1, 5), "d = r + s"),
            ParamSpec::int("s", 0, 8, (0, 8), "0 ≤ s ≤ d"),
        ],
        primes: &[], degree: 60..=150, numeric: false),
    entry!("thm7_14", FormalExact, lattice::thm7_14,
        "class-2 groups with central p-th powers and rank d: mass s(C(d,2))·p^d/Π(p^i−1)²",
        params: &[ParamSpec::int("d", 1, 4, (1, 3), "rank")],
        primes: EXACT_PRIMES, degree: 60..=150, numeric: false),
    entry!("thm7_15", Formal, lattice::thm7_15,
        "Σ_d Z_{Z^d}·x^{d²}/f_d = Σ π(n)xⁿ",
        params: NO_PARAMS, primes: &[], degree: 60..=150, numeric: true),
    entry!("zeta_20", FormalExact, lattice::zeta_20,
        "sublattice counts of Z^d against Hermite normal forms; Σ a_n x^{dn} = 1/f_d",
        params: &[ParamSpec::int("d", 1, 6, (1, 3), "rank")],
        primes: SMALL_PRIMES, degree: 60..=150, numeric: false),
];
