/// Orders the published tables mark as compatible with every relation,
/// keyed by knot, as (row label, chain).
pub const PUBLISHED_CHAINS: &[(&str, &[(&str, &str)])] = &[
    ("4_1", &[("B", "adbc")]),
    ("6_1", &[("E_1", "afbced"), ("E_2", "afbecd"), ("F_2", "abfced"), ("F_3", "abfecd")]),
    ("6_2", &[("E_1", "afebcd")]),
    ("7_6", &[("E_3", "baedcfg")]),
    ("7_7", &[("B_1", "debcagf"), ("C_3", "abcgfed")]),
    ("8_1", &[("C_1", "dcebfagh"), ("C_2", "dcbefagh"), ("D_1", "dcebafgh"), ("D_2", "dcbaefgh"), ("D_3", "dcbeafgh")]),
    ("8_2", &[("E", "dcbaefgh")]),
    ("8_3", &[("E_1", "abhgfcde"), ("E_2", "ahbgfcde"), ("E_3", "ahgbfcde"), ("F_1", "ahgbcfde"), ("F_2", "ahbgcfde"), ("F_3", "abhgcfde"), ("G_1", "ahgbcdfe"), ("G_2", "ahbgcdfe"), ("G_3", "abhgcdfe"), ("H_1", "ahbcgfde"), ("H_2", "abhcgfde"), ("I_1", "ahbcgdfe"), ("I_2", "abhcgdfe")]),
    ("8_4", &[("C_1", "fedghacb"), ("C_2", "fegdhacb"), ("C_3", "fgedhacb"), ("D_1", "fedghcab"), ("D_2", "fegdhcab"), ("D_3", "fgedhcab"), ("E_1", "fgedchab"), ("E_2", "fegdchab"), ("E_3", "fedgchab")]),
    ("8_5", &[("E_2", "fgheadcb"), ("E_3", "fghaedcb")]),
    ("8_6", &[("C_1", "efdgcbha"), ("C_2", "edfgcbha"), ("D_1", "efdcgbha"), ("D_2", "edfcgbha"), ("D_3", "edcfgbha"), ("E_1", "efdcbgha"), ("E_2", "edfcbgha"), ("E_3", "edcfbgha")]),
    ("8_9", &[("D_1", "gfehadbc"), ("D_2", "gfheadbc"), ("D_3", "ghfeadbc"), ("E_1", "gfehabdc"), ("E_2", "gfheabdc"), ("E_3", "ghfeabdc")]),
    ("8_11", &[("D_2", "cbfdehag"), ("E_1", "cbdfehag"), ("E_2", "cdbfehag"), ("H_1", "cdbahefg"), ("H_2", "cbdahefg"), ("J_1", "cbadhefg")]),
    ("8_12", &[("F_1", "ahbgcefd"), ("F_2", "ahbcgefd"), ("F_3", "ahbcegfd"), ("G_1", "abhgcefd"), ("G_2", "abhcgefd"), ("G_3", "abhcegfd"), ("I_1", "ahbgcedf"), ("I_2", "ahbcgedf"), ("I_3", "ahbcegdf"), ("I_4", "ahbcedgf"), ("J_1", "abhgcedf"), ("J_2", "abhcgedf"), ("J_3", "abhcegdf"), ("J_4", "abhcedgf"), ("K_2", "fgbacehd"), ("Q_1", "abchgefd"), ("Q_2", "abchegfd"), ("R_1", "abchgedf"), ("R_2", "abchegdf"), ("R_3", "abchedgf")]),
    ("8_13", &[("D_1", "bcaedhfg"), ("E_1", "bcaedfhg"), ("F_1", "bcaefdhg")]),
    ("8_14", &[("D_1", "fecdgbha"), ("D_2", "fecdghba")]),
    ("8_17", &[("E_2", "fgeahcbd"), ("H_2", "fgeahcdb"), ("J_1", "fgedchab")]),
    ("8_18", &[("N_1", "aebfdhcg"), ("N_2", "aefbdhcg"), ("O_1", "aebfhdcg"), ("O_2", "aefbhdcg"), ("Q_1", "aebfdhgc"), ("Q_2", "aefbdhgc"), ("R_1", "aebfhdgc"), ("R_2", "aefbhdgc"), ("T_1", "eabfdhcg"), ("T_2", "eafbdhcg"), ("U_1", "eabfhdcg"), ("U_2", "eafbhdcg"), ("W_1", "eabfdhgc"), ("W_2", "eafbdhgc"), ("X_1", "eabfhdgc"), ("X_2", "eafbhdgc")]),
    ("8_20", &[("D_2", "dcehabgf")]),
    ("8_21", &[("C_1", "bahfcgde"), ("C_2", "bahcfgde")]),
];
