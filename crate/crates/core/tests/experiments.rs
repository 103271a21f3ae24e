use fracorder::estimators::Theorem;
use fracorder::experiments::*;
use fracorder::forward_solver::Derivative;
use fracorder::quadrature::Regime;
use fracorder::{Error, Grid, Policy, Problem};

fn trace(d: Derivative, reg: Regime, a: f64, lam: f64, n: usize) -> TraceFile {
    let u1 = (reg == Regime::Super).then_some(2.0);
    let p = Problem::single(d, reg, a, lam, 1.0, u1).unwrap();
    let grid = Grid::graded(1.0, n, (2.0 / a).clamp(1.0, 8.0)).unwrap();
    run_solve(&p, &grid, &Policy::default()).unwrap()
}

#[test]
fn config_parsing() {
    let cfg = ExperimentConfig::parse(
        "# sweep\nalpha_list = 0.3, 0.6\nT_list=1\nlambda_list = 2  # one eigenvalue\noutput_format = csv\ntruncation = 200\n",
    )
    .unwrap();
    assert_eq!(cfg.alpha_list, vec![0.3, 0.6]);
    assert_eq!(cfg.t_list, vec![1.0]);
    assert_eq!(cfg.lambda_list, vec![2.0]);
    assert_eq!(cfg.truncation, Some(200));
    assert_eq!(cfg.output_format, OutputFormat::Csv);
    assert_eq!(cfg.u0, 1.0);

    assert!(matches!(ExperimentConfig::parse("alpha = 0.3"), Err(Error::Parse(_))));
    assert!(matches!(ExperimentConfig::parse("alpha_list = x"), Err(Error::Parse(_))));
    assert!(ExperimentConfig::parse("table_id = 9").is_err());
    assert!(ExperimentConfig::parse("T_list = 1").unwrap().resolved().is_err());

    let cfg = ExperimentConfig::parse("table_id = 4").unwrap().resolved().unwrap();
    assert_eq!(cfg.alpha_list, vec![1.3, 1.7]);
    assert_eq!(cfg.u1, Some(2.0));
    assert_eq!(cfg.truncation, Some(1000));
}

#[test]
fn table_ids() {
    assert!(TableId::new(0).is_err());
    assert!(TableId::new(5).is_err());
    assert_eq!(TableId::new(3).unwrap().theorem(), Theorem::T54);
    assert_eq!("2".parse::<TableId>().unwrap().theorem(), Theorem::T61);
    assert_eq!(printed_values(TableId::new(1).unwrap()).len(), 16);
}

#[test]
fn table_one_passes_and_is_deterministic() {
    let cfg = ExperimentConfig::preset(TableId::new(1).unwrap());
    let a = run_table(&cfg).unwrap();
    let b = run_table(&cfg).unwrap();
    assert!(a.all_pass(), "{}", a.to_text());
    assert_eq!(a.to_csv(), b.to_csv());
    assert_eq!(a.rows.len(), 16);
    let csv = a.render(OutputFormat::Csv);
    assert!(csv.lines().next().unwrap().starts_with("alpha,"));
    assert_eq!(csv.lines().count(), 17);
}

#[test]
fn custom_sweep() {
    let cfg = ExperimentConfig::parse("theorem = t53\nalpha_list = 0.5\nT_list = 1\nlambda_list = 1\ngrid_size = 1024")
        .unwrap();
    let rep = run_table(&cfg).unwrap();
    assert!(rep.all_pass(), "{}", rep.to_text());
    assert!((rep.rows[0].alpha_n - 0.5).abs() <= 1e-4);
}

#[test]
fn csv_round_trip() {
    for (d, reg, a) in [
        (Derivative::Caputo, Regime::Sub, 0.5),
        (Derivative::RiemannLiouville, Regime::Sub, 0.5),
        (Derivative::Caputo, Regime::Super, 1.4),
    ] {
        let tf = trace(d, reg, a, 2.0, 32);
        let text = tf.to_csv_string().unwrap();
        let back = TraceFile::parse(text.as_bytes()).unwrap();
        assert_eq!(back.t, tf.t);
        for (x, y) in back.u.iter().zip(&tf.u) {
            assert!(x == y || (x.is_nan() && y.is_nan()));
        }
        assert_eq!(back.du.is_some(), tf.du.is_some());
        assert_eq!(back.ddu.is_some(), tf.ddu.is_some());
    }
    let tf = trace(Derivative::Caputo, Regime::Super, 1.4, 2.0, 4);
    assert!(tf.to_csv_string().unwrap().starts_with("t,u,du,ddu"));
    let tf = trace(Derivative::RiemannLiouville, Regime::Sub, 0.5, 2.0, 4);
    let text = tf.to_csv_string().unwrap();
    assert!(text.lines().nth(1).unwrap().contains("NA"));
}

#[test]
fn malformed_csv() {
    let bad = [
        "x,u\n0,1\n1,2\n",
        "t,u\n0,1\n",
        "t,u\n0,1\n0.5,abc\n",
        "t,u\n0.1,1\n0.5,2\n",
        "t,u\n0,1\n0.5,2\n0.4,3\n",
        "t,u\n0,1\n0.5,NA\n",
        "t,u,ddu\n0,1,1\n0.5,2,1\n",
    ];
    for text in bad {
        assert!(TraceFile::parse(text.as_bytes()).is_err(), "{text:?}");
    }
}

#[test]
fn singular_exponent_on_import() {
    let tf = trace(Derivative::RiemannLiouville, Regime::Sub, 0.4, 1.0, 2048);
    let back = TraceFile::parse(tf.to_csv_string().unwrap().as_bytes()).unwrap();
    let p = back.singular_exponent().unwrap();
    assert!((p + 0.6).abs() <= 1e-3, "{p}");
}

#[test]
fn estimate_from_trace_file() {
    let tf = trace(Derivative::Caputo, Regime::Sub, 0.6, 4.0, 4096);
    let tf = TraceFile::parse(tf.to_csv_string().unwrap().as_bytes()).unwrap();
    let mut params = EstimateParams::new(Theorem::T51);
    params.lambda = Some(4.0);
    let rep = run_estimate(&tf, &params).unwrap();
    assert!((rep.result.alpha_hat - 0.6).abs() <= 1e-4, "{}", rep.to_text());

    let mut params = EstimateParams::new(Theorem::SmallTime);
    params.derivative = Some(Derivative::Caputo);
    params.regime = Some(Regime::Sub);
    let rep = run_estimate(&tf, &params).unwrap();
    assert!((rep.result.alpha_hat - 0.6).abs() <= 1e-3, "{}", rep.to_text());

    assert!(run_estimate(&tf, &EstimateParams::new(Theorem::T51)).is_err());
    assert!(run_estimate(&tf, &EstimateParams::new(Theorem::SmallTime)).is_err());
}
