#![allow(clippy::excessive_precision)]
//! Frozen reference values from tools/oracle.py (mpmath, 60+ digits).
#![allow(dead_code)]

pub const ML_02_1_N50: f64 = 21380036142928.28685;
pub const ML_02_1_FULL: f64 = 0.25796319445842110644;
pub const PRAB_02_2_N50: f64 = 1.1575034393063086917e+24;
pub const PRAB_02_2_FULL: f64 = 0.044429095096671179116;
pub const RES_04_1_L9_T1: f64 = 0.071727412827679328176;
pub const S14_1_T05: f64 = 0.17615273151189870895;
pub const S14_2_T05: f64 = 0.30097417554001497607;
pub const DU_14_T05: f64 = -1.0701924711781142098;
pub const DDU_14_T05: f64 = -0.11804715310686013828;
pub const RL_SUB_04_T01: f64 = 0.23550134065593640927;
pub const PRAB_CONV_02_1_05: f64 = 0.15378041745427557908;
pub const PRAB_CONV_02_1_10: f64 = 0.27017661284773287987;
pub const PRAB_CONV_02_4_05: f64 = 0.027603186025851494865;
pub const PRAB_CONV_02_4_10: f64 = 0.044429095096671179116;
pub const PRAB_CONV_05_1_05: f64 = 0.20211543919713464412;
pub const PRAB_CONV_05_1_10: f64 = 0.29920440906029443051;
pub const PRAB_CONV_05_4_05: f64 = 0.040048812240475417288;
pub const PRAB_CONV_05_4_10: f64 = 0.045841657374678299437;
pub const PRAB_CONV_08_1_05: f64 = 0.26015621980749474905;
pub const PRAB_CONV_08_1_10: f64 = 0.33421039418851995082;
pub const PRAB_CONV_08_4_05: f64 = 0.053602230626880111161;
pub const PRAB_CONV_08_4_10: f64 = 0.036407087332250778772;
pub const TABLE1_EXACT: &[(f64, f64, f64, f64)] = &[
    (0.2, 0.1, 4.0, 0.2000000000000000111),
    (0.2, 0.1, 9.0, 0.2000000000000000111),
    (0.2, 1.0, 4.0, 0.2000000000000000111),
    (0.2, 1.0, 9.0, 0.2000000000000000111),
    (0.2, 10.0, 4.0, 0.2000000000000000111),
    (0.2, 10.0, 9.0, 0.2000000000000000111),
    (0.2, 100.0, 4.0, 0.2000000000000000111),
    (0.2, 100.0, 9.0, 0.2000000000000000111),
    (0.4, 0.1, 4.0, 0.4000000000000000222),
    (0.4, 0.1, 9.0, 0.4000000000000000222),
    (0.4, 1.0, 4.0, 0.4000000000000000222),
    (0.4, 1.0, 9.0, 0.4000000000000000222),
    (0.4, 10.0, 4.0, 0.4000000000000000222),
    (0.4, 10.0, 9.0, 0.4000000000000000222),
    (0.4, 100.0, 4.0, 0.4000000000000000222),
    (0.4, 100.0, 9.0, 0.4000000000000000222),
];
pub const TABLE2_EXACT: &[(f64, f64, f64, f64)] = &[
    (1.4, 0.5, 1.0, 1.3999999999999999112),
    (1.4, 0.5, 4.0, 1.3999999999999999112),
    (1.4, 1.0, 1.0, 1.3999999999999999112),
    (1.4, 1.0, 4.0, 1.3999999999999999112),
    (1.4, 5.0, 1.0, 1.3999999999999999112),
    (1.4, 5.0, 4.0, 1.3999999999999999112),
    (1.8, 0.5, 1.0, 1.8000000000000000444),
    (1.8, 0.5, 4.0, 1.8000000000000000444),
    (1.8, 1.0, 1.0, 1.8000000000000000444),
    (1.8, 1.0, 4.0, 1.8000000000000000444),
    (1.8, 5.0, 1.0, 1.8000000000000000444),
    (1.8, 5.0, 4.0, 1.8000000000000000444),
];
pub const TABLE3_EXACT: &[(f64, f64, f64, f64)] = &[
    (0.4, 0.1, 1.0, 0.4000000000000000222),
    (0.4, 0.1, 4.0, 0.4000000000000000222),
    (0.4, 0.5, 1.0, 0.4000000000000000222),
    (0.4, 0.5, 4.0, 0.4000000000000000222),
    (0.4, 1.0, 1.0, 0.4000000000000000222),
    (0.4, 1.0, 4.0, 0.4000000000000000222),
    (0.7, 0.1, 1.0, 0.69999999999999995559),
    (0.7, 0.1, 4.0, 0.69999999999999995559),
    (0.7, 0.5, 1.0, 0.69999999999999995559),
    (0.7, 0.5, 4.0, 0.69999999999999995559),
    (0.7, 1.0, 1.0, 0.69999999999999995559),
    (0.7, 1.0, 4.0, 0.69999999999999995559),
];
pub const TABLE4_EXACT: &[(f64, f64, f64, f64)] = &[
    (1.3, 0.1, 1.0, 1.3000000000000000444),
    (1.3, 0.1, 4.0, 1.3000000000000000444),
    (1.3, 0.5, 1.0, 1.3000000000000000444),
    (1.3, 0.5, 4.0, 1.3000000000000000444),
    (1.3, 1.0, 1.0, 1.3000000000000000444),
    (1.3, 1.0, 4.0, 1.3000000000000000444),
    (1.7, 0.1, 1.0, 1.6999999999999999556),
    (1.7, 0.1, 4.0, 1.6999999999999999556),
    (1.7, 0.5, 1.0, 1.6999999999999999556),
    (1.7, 0.5, 4.0, 1.6999999999999999556),
    (1.7, 1.0, 1.0, 1.6999999999999999556),
    (1.7, 1.0, 4.0, 1.6999999999999999556),
];

/// Printed ten-digit values: (alpha, T, lambda, alpha_n).
pub const TABLE1_PRINTED: &[(f64, f64, f64, f64)] = &[
    (0.2, 0.1, 4.0, 0.1999999998),
    (0.2, 0.1, 9.0, 0.1999999998),
    (0.2, 1.0, 4.0, 0.2000000002),
    (0.2, 1.0, 9.0, 0.2000000000),
    (0.2, 10.0, 4.0, 0.1999999999),
    (0.2, 10.0, 9.0, 0.2000000003),
    (0.2, 100.0, 4.0, 0.1999999999),
    (0.2, 100.0, 9.0, 0.2000000001),
    (0.4, 0.1, 4.0, 0.3999999997),
    (0.4, 0.1, 9.0, 0.3999999998),
    (0.4, 1.0, 4.0, 0.3999999996),
    (0.4, 1.0, 9.0, 0.4000000001),
    (0.4, 10.0, 4.0, 0.4000000001),
    (0.4, 10.0, 9.0, 0.4000000002),
    (0.4, 100.0, 4.0, 0.3999999997),
    (0.4, 100.0, 9.0, 0.4000000000),
];
pub const TABLE2_PRINTED: &[(f64, f64, f64, f64)] = &[
    (1.4, 0.5, 1.0, 1.4000000001),
    (1.4, 0.5, 4.0, 1.3999999999),
    (1.4, 1.0, 1.0, 1.4000000001),
    (1.4, 1.0, 4.0, 1.3999999999),
    (1.4, 5.0, 1.0, 1.4000000008),
    (1.4, 5.0, 4.0, 1.399959885),
    (1.8, 0.5, 1.0, 1.8000000002),
    (1.8, 0.5, 4.0, 1.7999999997),
    (1.8, 1.0, 1.0, 1.8000000002),
    (1.8, 1.0, 4.0, 1.8000000000),
    (1.8, 5.0, 1.0, 1.8000000011),
    (1.8, 5.0, 4.0, 1.799986643),
];
pub const TABLE3_PRINTED: &[(f64, f64, f64, f64)] = &[
    (0.4, 0.1, 1.0, 0.3999999998),
    (0.4, 0.1, 4.0, 0.4000000066),
    (0.4, 0.5, 1.0, 0.3999999994),
    (0.4, 0.5, 4.0, 0.3999999709),
    (0.4, 1.0, 1.0, 0.3999999994),
    (0.4, 1.0, 4.0, 0.3999998780),
    (0.7, 0.1, 1.0, 0.6999999993),
    (0.7, 0.1, 4.0, 0.7000000018),
    (0.7, 0.5, 1.0, 0.6999999986),
    (0.7, 0.5, 4.0, 0.6999998401),
    (0.7, 1.0, 1.0, 0.7000000000),
    (0.7, 1.0, 4.0, 0.6999962379),
];
pub const TABLE4_PRINTED: &[(f64, f64, f64, f64)] = &[
    (1.3, 0.1, 1.0, 1.3000000000),
    (1.3, 0.1, 4.0, 1.3000000001),
    (1.3, 0.5, 1.0, 1.2999999999),
    (1.3, 0.5, 4.0, 1.2999999999),
    (1.3, 1.0, 1.0, 1.3000000002),
    (1.3, 1.0, 4.0, 1.3000000004),
    (1.7, 0.1, 1.0, 1.7000000000),
    (1.7, 0.1, 4.0, 1.7000000001),
    (1.7, 0.5, 1.0, 1.6999999999),
    (1.7, 0.5, 4.0, 1.7000000000),
    (1.7, 1.0, 1.0, 1.7000000000),
    (1.7, 1.0, 4.0, 1.7000000001),
];
