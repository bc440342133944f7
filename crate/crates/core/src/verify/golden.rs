//! The golden dataset: reference decimal strings embedded verbatim, one
//! item per replayed number, with per-item tolerances and flags for the
//! two known transcription slips in the source tables.
//!
//! A pinned FNV-1a checksum over the dataset keeps the strings from
//! drifting silently.

/// Tolerance semantics for one golden item.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tol {
    /// |computed - expected| <= bound (decimal string).
    Abs(&'static str),
    /// |computed - expected| / |expected| <= bound.
    Rel(&'static str),
    /// computed / expected within [1/f, f].
    FactorOf(u32),
    /// expected is "true"/"false"; computed must match.
    Bool,
}

impl Tol {
    pub fn render(&self) -> String {
        match self {
            Tol::Abs(s) => format!("abs<={s}"),
            Tol::Rel(s) => format!("rel<={s}"),
            Tol::FactorOf(f) => format!("factor<={f}"),
            Tol::Bool => "bool".to_string(),
        }
    }
}

/// One golden expectation.
#[derive(Clone, Copy, Debug)]
pub struct GoldenSpec {
    pub id: &'static str,
    pub source: &'static str,
    pub expected: &'static str,
    pub tol: Tol,
    pub flagged: bool,
    pub note: &'static str,
}

const fn item(
    id: &'static str,
    source: &'static str,
    expected: &'static str,
    tol: Tol,
) -> GoldenSpec {
    GoldenSpec {
        id,
        source,
        expected,
        tol,
        flagged: false,
        note: "",
    }
}

/// Even-order coefficients of xi(s + 1/2): the Pustylnikov xi_r.
pub const XI_COEFFS: [&str; 6] = [
    "0.497120778188314109912774",
    "0.0114859721575727187676249",
    "0.000123452018070318006890346",
    "8.32355481385527072004759e-7",
    "3.99222655134413717472527e-9",
    "1.46160257601109608624121e-11",
];

/// Coefficients D_n of xi(s - 1/2) about s = 0.
pub const D_COEFFS: [&str; 11] = [
    "0.508731038726323958025671",
    "-0.0234707786048020825988372",
    "0.0122392820411106099993383",
    "-0.000510680509960582081197381",
    "0.000136219896777660495235434",
    "-5.22141487535619756401486e-6",
    "9.47246998269225412163851e-7",
    "-3.37259460993816995307624e-8",
    "4.67141900041698784170513e-9",
    "-1.55773064531108593374648e-10",
    "1.75421192426233609057205e-11",
];

/// Coefficients E_n^+ of xi_+(s).
pub const E_PLUS_COEFFS: [&str; 11] = [
    "0.502925908457319033969223",
    "-0.0117353893024010412994186",
    "0.0118626270993416643834816",
    "-0.000255340254980291040598691",
    "0.000129835957423989251062890",
    "-2.61070743767809878200743e-6",
    "8.89801239827376242084305e-7",
    "-1.68629730496908497653812e-8",
    "4.33182277588056250821520e-9",
    "-7.78865322655542966873238e-11",
    "1.60790725013671608840663e-11",
];

/// Coefficients E_n^- of xi_-(s).
pub const E_MINUS_COEFFS: [&str; 11] = [
    "-0.005805130269004924056449",
    "0.0117353893024010412994186",
    "-0.0003766549417689456158567",
    "0.000255340254980291040598691",
    "-6.383939353671244172544e-6",
    "2.61070743767809878200743e-6",
    "-5.7445758441849170079546e-8",
    "1.68629730496908497653812e-8",
    "-3.3959622453642533348993e-10",
    "7.78865322655542966873238e-11",
    "-1.4630467412562000216542e-12",
];

/// Coefficients F_n of xi(s) about s = 0.
pub const F_COEFFS: [&str; 11] = [
    "0.500000000000000000000000",
    "-0.0115478544830605169071551",
    "0.0116719322671130915674412",
    "-0.000248991924961474336175586",
    "0.000126590865158263502528061",
    "-2.52512739610958708479262e-6",
    "8.60493520930767788890077e-7",
    "-1.61892073094053848017403e-8",
    "4.15798412501386081535438e-9",
    "-7.42620960745947002261292e-11",
    "1.53278011638166567551397e-11",
];

/// sigma_1 .. sigma_10.
pub const SIGMA_VALUES: [&str; 10] = [
    "0.0230957089661210338143102",
    "-0.0461543172958046027571080",
    "-0.00011115823145210592276267",
    "0.00007362722126168951832677",
    "7.15093355762607735801e-7",
    "-2.81436416938766261607e-7",
    "-4.5741911497047721112e-9",
    "1.26886811095076071901e-9",
    "2.8274371550558870893e-11",
    "-5.997714847151874595e-12",
];

/// Taylor coefficients of xi(1/(1-w) + 1/2) about w = 0, orders 0..12.
pub const XI_H_W_COEFFS: [&str; 13] = [
    "0.508731038726323958025671",
    "0.0234707786048020825988372",
    "0.0357100606459126925981755",
    "0.0484600231969838846787112",
    "0.0618568861547933193356797",
    "0.0760420908309940132618804",
    "0.0911632471991126085730891",
    "0.107375114867493741415169",
    "0.124840622449609510369871",
    "0.143731930158926109607415",
    "0.164231540628834875507686",
    "0.186533463149563699312568",
    "0.210844436724090899321712",
];

/// Taylor coefficients of xi(1/(1-w) - 1/2) about w = 0, orders 0..12
/// (the order-1 coefficient vanishes).
pub const XI_M_W_COEFFS: [&str; 13] = [
    "0.497120778188314109912774",
    "0",
    "0.011485972157572718767622",
    "0.022971944315145437535244",
    "0.034581368490788474309757",
    "0.046437696702572147098050",
    "0.058665213324048159434086",
    "0.071389867439730985905972",
    "0.084740109192805809027167",
    "0.098847734117289558795967",
    "0.113848739461487632047511",
    "0.12988419653882092022278",
    "0.14710114318598859685984",
];

/// log xi(1/(1-w) + 1/2), orders 0..12.
pub const LOG_XI_H_COEFFS: [&str; 13] = [
    "-0.675835813236695767842275",
    "0.0461359280604625753594660",
    "0.0691301196352103328072490",
    "0.0920509179650365681271473",
    "0.114880446150576506783275",
    "0.137601106517779960377133",
    "0.160195624167229059202861",
    "0.182647089272462999988600",
    "0.204938997989198298868628",
    "0.227055291843200263329215",
    "0.248980395470907623248291",
    "0.270699252593709637403009",
    "0.292197360113993960590683",
];

/// log xi(1/(1-w) - 1/2), orders 0..12 (no order-1 term).
pub const LOG_XI_M_COEFFS: [&str; 13] = [
    "-0.698922267945331415298362",
    "0",
    "0.0231049931154189707889338",
    "0.0462099862308379415778676",
    "0.0692963930466142775237190",
    "0.0923456272631053437834055",
    "0.115339150638645639171605",
    "0.138258521047523929818514",
    "0.161085440372202462764362",
    "0.183801802064020339427427",
    "0.206389738207265861712433",
    "0.228831665922788129186448",
    "0.251110332949243718084027",
];

/// log xi_+(1/(1-w)), orders 0..12.
pub const LOG_XI_PLUS_COEFFS: [&str; 13] = [
    "-0.687312419021627833700725",
    "0.023334230957395524232106",
    "0.046649213860405348103991",
    "0.069925751526272229957378",
    "0.093144748336397953034365",
    "0.116287260571386560139602",
    "0.139334546211624749855289",
    "0.162268114028537401476190",
    "0.18506977179446033912675",
    "0.20772167344255548785287",
    "0.23020636501234089942540",
    "0.25250682922120233406310",
    "0.27460652850767407018678",
];

/// log xi_-(1/(1-w)), orders 0..12.
pub const LOG_XI_MINUS_COEFFS: [&str; 13] = [
    "-5.1490132232563522103123",
    "2.021554858994170669692",
    "0.04309595122735336775",
    "0.73127620503659101949",
    "0.0860819388755765953",
    "0.5074995561747003636",
    "0.1288489066305341210",
    "0.435830932894465061",
    "0.171289602583570808",
    "0.414577014426957098",
    "0.21329945625114847",
    "0.41592926321690695",
    "0.25477742573189697",
];

/// Key-point rows: (w, s, xi(s+1/2), xi(s-1/2)).
pub const TABLE1_ROWS: [(&str, &str, &str, &str); 6] = [
    ("-1", "0.5", "0.5", "0.5"),
    ("-0.333333333333333333333333333333", "0.75", "0.503621", "0.497839"),
    ("0", "1", "0.508371", "0.497121"),
    ("0.5", "2", "0.545094", "0.508731"),
    ("0.9", "10", "4.31356", "2.9175"),
    ("0.95", "20", "1024.78", "531.726"),
];

/// The tau bound as printed; the computed 2 sigma_1 is 0.0461914179322...,
/// so the printed constant carries a transposed digit.
pub const PRINTED_TAU_BOUND: &str = "0.046191479322";

const TOL_24_DIGITS: Tol = Tol::Abs("1e-20");
const TOL_W_SERIES: Tol = Tol::Abs("1e-18");
const TOL_LOG_MINUS: Tol = Tol::Abs("1e-15");
const TOL_TABLE1: Tol = Tol::Rel("5e-5");
const TOL_IDENTITY: Tol = Tol::Abs("1e-26");

/// Golden items for the direct xi_r integral route.
pub fn pustylnikov_items() -> Vec<GoldenSpec> {
    XI_COEFFS
        .iter()
        .enumerate()
        .map(|(r, v)| GoldenSpec {
            id: XI_COEFF_IDS[r],
            source: "even-order coefficient list of xi(s + 1/2)",
            expected: v,
            tol: TOL_24_DIGITS,
            flagged: false,
            note: "",
        })
        .collect()
}

pub const XI_COEFF_IDS: [&str; 6] = [
    "xi_coeff_0",
    "xi_coeff_1",
    "xi_coeff_2",
    "xi_coeff_3",
    "xi_coeff_4",
    "xi_coeff_5",
];

const F_IDS: [&str; 11] = [
    "f_0", "f_1", "f_2", "f_3", "f_4", "f_5", "f_6", "f_7", "f_8", "f_9", "f_10",
];
const D_IDS: [&str; 11] = [
    "d_0", "d_1", "d_2", "d_3", "d_4", "d_5", "d_6", "d_7", "d_8", "d_9", "d_10",
];
const EP_IDS: [&str; 11] = [
    "e_plus_0", "e_plus_1", "e_plus_2", "e_plus_3", "e_plus_4", "e_plus_5", "e_plus_6",
    "e_plus_7", "e_plus_8", "e_plus_9", "e_plus_10",
];
const EM_IDS: [&str; 11] = [
    "e_minus_0", "e_minus_1", "e_minus_2", "e_minus_3", "e_minus_4", "e_minus_5", "e_minus_6",
    "e_minus_7", "e_minus_8", "e_minus_9", "e_minus_10",
];

pub fn series_s_items() -> Vec<GoldenSpec> {
    let mut out = Vec::new();
    for (arr, ids, source) in [
        (&F_COEFFS, &F_IDS, "coefficient list of xi(s) about 0"),
        (&D_COEFFS, &D_IDS, "coefficient list of xi(s - 1/2)"),
        (&E_PLUS_COEFFS, &EP_IDS, "coefficient list of xi_+(s)"),
        (&E_MINUS_COEFFS, &EM_IDS, "coefficient list of xi_-(s)"),
    ] {
        for (n, v) in arr.iter().enumerate() {
            out.push(item(ids[n], source, v, TOL_24_DIGITS));
        }
    }
    out
}

const XI_H_IDS: [&str; 13] = [
    "xi_h_w_0", "xi_h_w_1", "xi_h_w_2", "xi_h_w_3", "xi_h_w_4", "xi_h_w_5", "xi_h_w_6",
    "xi_h_w_7", "xi_h_w_8", "xi_h_w_9", "xi_h_w_10", "xi_h_w_11", "xi_h_w_12",
];
const XI_M_IDS: [&str; 13] = [
    "xi_m_w_0", "xi_m_w_1", "xi_m_w_2", "xi_m_w_3", "xi_m_w_4", "xi_m_w_5", "xi_m_w_6",
    "xi_m_w_7", "xi_m_w_8", "xi_m_w_9", "xi_m_w_10", "xi_m_w_11", "xi_m_w_12",
];

pub fn series_w_items() -> Vec<GoldenSpec> {
    let mut out = Vec::new();
    for (n, v) in XI_H_W_COEFFS.iter().enumerate() {
        out.push(item(
            XI_H_IDS[n],
            "w-series of xi(1/(1-w) + 1/2)",
            v,
            TOL_W_SERIES,
        ));
    }
    for (n, v) in XI_M_W_COEFFS.iter().enumerate() {
        out.push(item(
            XI_M_IDS[n],
            "w-series of xi(1/(1-w) - 1/2)",
            v,
            TOL_W_SERIES,
        ));
    }
    out
}

const LOG_H_IDS: [&str; 13] = [
    "log_xi_h_w_0", "log_xi_h_w_1", "log_xi_h_w_2", "log_xi_h_w_3", "log_xi_h_w_4",
    "log_xi_h_w_5", "log_xi_h_w_6", "log_xi_h_w_7", "log_xi_h_w_8", "log_xi_h_w_9",
    "log_xi_h_w_10", "log_xi_h_w_11", "log_xi_h_w_12",
];
const LOG_M_IDS: [&str; 13] = [
    "log_xi_m_w_0", "log_xi_m_w_1", "log_xi_m_w_2", "log_xi_m_w_3", "log_xi_m_w_4",
    "log_xi_m_w_5", "log_xi_m_w_6", "log_xi_m_w_7", "log_xi_m_w_8", "log_xi_m_w_9",
    "log_xi_m_w_10", "log_xi_m_w_11", "log_xi_m_w_12",
];
const LOG_P_IDS: [&str; 13] = [
    "log_xi_plus_w_0", "log_xi_plus_w_1", "log_xi_plus_w_2", "log_xi_plus_w_3",
    "log_xi_plus_w_4", "log_xi_plus_w_5", "log_xi_plus_w_6", "log_xi_plus_w_7",
    "log_xi_plus_w_8", "log_xi_plus_w_9", "log_xi_plus_w_10", "log_xi_plus_w_11",
    "log_xi_plus_w_12",
];
const LOG_N_IDS: [&str; 13] = [
    "log_xi_minus_w_0", "log_xi_minus_w_1", "log_xi_minus_w_2", "log_xi_minus_w_3",
    "log_xi_minus_w_4", "log_xi_minus_w_5", "log_xi_minus_w_6", "log_xi_minus_w_7",
    "log_xi_minus_w_8", "log_xi_minus_w_9", "log_xi_minus_w_10", "log_xi_minus_w_11",
    "log_xi_minus_w_12",
];

pub fn log_series_w_items() -> Vec<GoldenSpec> {
    let mut out = Vec::new();
    for (arr, ids, source, tol) in [
        (
            &LOG_XI_H_COEFFS,
            &LOG_H_IDS,
            "log series of xi(1/(1-w) + 1/2)",
            TOL_W_SERIES,
        ),
        (
            &LOG_XI_M_COEFFS,
            &LOG_M_IDS,
            "log series of xi(1/(1-w) - 1/2)",
            TOL_W_SERIES,
        ),
        (
            &LOG_XI_PLUS_COEFFS,
            &LOG_P_IDS,
            "log series of xi_+(1/(1-w))",
            TOL_W_SERIES,
        ),
        (
            &LOG_XI_MINUS_COEFFS,
            &LOG_N_IDS,
            "log series of xi_-(1/(1-w))",
            TOL_LOG_MINUS,
        ),
    ] {
        for (n, v) in arr.iter().enumerate() {
            out.push(item(ids[n], source, v, tol));
        }
    }
    out
}

const SIGMA_IDS: [&str; 10] = [
    "sigma_1", "sigma_2", "sigma_3", "sigma_4", "sigma_5", "sigma_6", "sigma_7", "sigma_8",
    "sigma_9", "sigma_10",
];

pub fn keiper_items() -> Vec<GoldenSpec> {
    let mut out: Vec<GoldenSpec> = SIGMA_VALUES
        .iter()
        .enumerate()
        .map(|(k, v)| item(SIGMA_IDS[k], "zero-power sums sigma_1..sigma_10", v, TOL_24_DIGITS))
        .collect();
    out.push(GoldenSpec {
        id: "tau_bound_printed",
        source: "printed bound on |tau_k|",
        expected: PRINTED_TAU_BOUND,
        tol: Tol::Rel("1e-6"),
        flagged: true,
        note: "printed constant transposes a digit of 2 sigma_1 = 0.0461914179322...",
    });
    out
}

pub fn table1_items() -> Vec<GoldenSpec> {
    let mut out = Vec::new();
    let ids_up: [&str; 6] = [
        "table1_xi_up_w_m1",
        "table1_xi_up_w_m13",
        "table1_xi_up_w_0",
        "table1_xi_up_w_12",
        "table1_xi_up_w_09",
        "table1_xi_up_w_095",
    ];
    let ids_down: [&str; 6] = [
        "table1_xi_down_w_m1",
        "table1_xi_down_w_m13",
        "table1_xi_down_w_0",
        "table1_xi_down_w_12",
        "table1_xi_down_w_09",
        "table1_xi_down_w_095",
    ];
    for (i, (_, _, up, down)) in TABLE1_ROWS.iter().enumerate() {
        let flagged = i == 2;
        out.push(GoldenSpec {
            id: ids_up[i],
            source: "key-point table, xi(s + 1/2) column",
            expected: up,
            tol: TOL_TABLE1,
            flagged,
            note: if flagged {
                "printed 0.508371 transposes the recomputed 0.508731"
            } else {
                ""
            },
        });
        out.push(GoldenSpec {
            id: ids_down[i],
            source: "key-point table, xi(s - 1/2) column",
            expected: down,
            tol: TOL_TABLE1,
            flagged: false,
            note: "",
        });
    }
    out
}

pub fn closed_form_items() -> Vec<GoldenSpec> {
    vec![
        item("closed_c0", "closed form C0", XI_COEFFS[0], TOL_24_DIGITS),
        item("closed_c1", "closed form C1 = 0", "0", TOL_IDENTITY),
        item("closed_c2", "closed form C2", XI_COEFFS[1], TOL_24_DIGITS),
        item("closed_d0", "closed form D0", D_COEFFS[0], TOL_24_DIGITS),
        item("closed_d1", "closed form D1", D_COEFFS[1], TOL_24_DIGITS),
        item("closed_f0", "closed form F0", "0.5", TOL_IDENTITY),
        item("closed_f1", "closed form F1", F_COEFFS[1], TOL_24_DIGITS),
        item("closed_f2", "closed form F2", F_COEFFS[2], TOL_24_DIGITS),
        item(
            "zeta_half_identity",
            "zeta'(1/2) elimination identity residual",
            "0",
            TOL_IDENTITY,
        ),
    ]
}

pub fn riemann_items() -> Vec<GoldenSpec> {
    vec![
        item(
            "dirichlet_rel_err_08",
            "truncated Dirichlet log, relative error at w = 0.8",
            "0.025",
            Tol::FactorOf(2),
        ),
        item(
            "dirichlet_rel_err_085",
            "truncated Dirichlet log, relative error at w = 0.85",
            "0.005",
            Tol::FactorOf(2),
        ),
        item(
            "dirichlet_rel_err_09",
            "truncated Dirichlet log, relative error at w = 0.9",
            "0.0002",
            Tol::FactorOf(2),
        ),
        item(
            "approx_deviation_monotone",
            "combined approximation deviation decreasing on {0.8, 0.85, 0.9, 0.95}",
            "true",
            Tol::Bool,
        ),
    ]
}

/// FNV-1a 64 over the canonical rendering of every suite's items.
pub fn dataset_checksum() -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |bytes: &[u8]| {
        for b in bytes {
            h ^= *b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    };
    for (suite, items) in [
        ("pustylnikov_coeffs", pustylnikov_items()),
        ("series_s", series_s_items()),
        ("series_w", series_w_items()),
        ("log_series_w", log_series_w_items()),
        ("keiper_sigma", keiper_items()),
        ("table1", table1_items()),
        ("closed_forms", closed_form_items()),
        ("riemann_errors", riemann_items()),
    ] {
        eat(suite.as_bytes());
        for it in items {
            eat(it.id.as_bytes());
            eat(it.source.as_bytes());
            eat(it.expected.as_bytes());
            eat(it.tol.render().as_bytes());
            eat(if it.flagged { b"1" } else { b"0" });
        }
    }
    h
}
