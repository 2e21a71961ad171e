//! One function per subcommand; each returns the report to print.

use std::path::Path;

use loday_core::anticyclic::convention_search as search;
use loday_core::cochains::leibniz_identity_check;
use loday_core::error::AlgebraError;
use loday_core::world::{
    ac_bracket_functions, build_mu, build_theta, double_brackets, flow_transform, gsi_check, gsi_graph_check,
    inverse_metric_function, is_leibniz, metric_function, poisson, structure_check, twisted_bracket, StructureVerdict,
    SymplecticPlane, Twist,
};
use loday_core::zinbiel::zinbiel_axiom_check;
use loday_core::{LeibnizTable, SignPolicy};

use crate::files::{load_algebra, load_function, load_metric, load_twist, InputError};
use crate::report::{Output, Report, Verdict, Witness};

fn shipped() -> &'static str {
    SignPolicy::SHIPPED.id()
}

fn algebra_error(path: &Path, e: AlgebraError) -> InputError {
    InputError::Invalid {
        path: path.to_path_buf(),
        field: "algebra".into(),
        message: e.to_string(),
    }
}

fn triple(t: [usize; 3]) -> String {
    format!("(e{}, e{}, e{})", t[0] + 1, t[1] + 1, t[2] + 1)
}

pub fn check_leibniz(path: &Path) -> Result<Report, InputError> {
    let file = load_algebra(path)?;
    let t = file.value.leibniz(path)?;
    let mut r = Report::new("check leibniz", shipped(), None, &[&file.bytes]);
    let mut v = Verdict::new("leibniz", "[x,[y,z]] = [[x,y],z] + [y,[x,z]] on basis triples");
    let bad = leibniz_identity_check(&t);
    v.check(bad.is_none(), || {
        let b = bad.clone().expect("failure has a triple");
        Witness::with_element(format!("lhs - rhs at {}", triple(b.triple)), &b.residual())
    });
    v.checked = t.dim().pow(3);
    r.push(v);
    Ok(r)
}

pub fn check_zinbiel(path: &Path) -> Result<Report, InputError> {
    let file = load_algebra(path)?;
    let t = file.value.zinbiel(path)?;
    let mut r = Report::new("check zinbiel", shipped(), None, &[&file.bytes]);
    let mut v = Verdict::new("zinbiel", "x*(y*z) = (x*y)*z + (y*x)*z on basis triples");
    let bad = zinbiel_axiom_check(&t);
    v.check(bad.is_none(), || {
        let b = bad.clone().expect("failure has a triple");
        Witness::with_element(format!("lhs - rhs at {}", triple(b.triple)), &b.lhs.sub(&b.rhs))
    });
    v.checked = t.dim().pow(3);
    r.push(v);
    Ok(r)
}

fn leibniz_table(path: &Path) -> Result<(Vec<u8>, LeibnizTable), InputError> {
    let file = load_algebra(path)?;
    let t = file.value.leibniz(path)?;
    Ok((file.bytes, t))
}

pub fn mu(path: &Path) -> Result<Report, InputError> {
    let (bytes, t) = leibniz_table(path)?;
    let mu = build_mu(&t).map_err(|e| algebra_error(path, e))?;
    let mut r = Report::new("mu", shipped(), None, &[&bytes]);
    r.output(Output::element("mu", &mu.to_tensor()));
    Ok(r)
}

pub fn poisson_bracket(f: &Path, g: &Path, plane: &Path) -> Result<Report, InputError> {
    let (bytes, t) = leibniz_table(plane)?;
    let (ff, gf) = (load_function(f)?, load_function(g)?);
    for (p, file) in [(f, &ff), (g, &gf)] {
        if file.value.dim != t.dim() {
            return Err(InputError::Invalid {
                path: p.to_path_buf(),
                field: "dim".into(),
                message: format!("plane has dim {}, function has dim {}", t.dim(), file.value.dim),
            });
        }
    }
    let (a1, a2) = (ff.value.function(f)?, gf.value.function(g)?);
    let bracket = poisson(&a1, &a2).map_err(|e| algebra_error(f, e))?;
    let routed = ac_bracket_functions(&a1, &a2).map_err(|e| algebra_error(f, e))?;
    let mut r = Report::new("poisson", shipped(), None, &[&ff.bytes, &gf.bytes, &bytes]);
    r.output(Output::element("{f,g}", &bracket.to_tensor()));
    let mut v = Verdict::new("routes", "coordinate formula agrees with the Hamiltonian field commutator");
    v.check(bracket == routed, || {
        Witness::with_element("coordinate formula minus commutator route", &bracket.to_tensor().sub(&routed.to_tensor()))
    });
    r.push(v);
    Ok(r)
}

pub fn structure(path: &Path, twist: Option<&Path>) -> Result<Report, InputError> {
    let (bytes, t) = leibniz_table(path)?;
    let (h, twist_bytes) = match twist {
        Some(p) => {
            let file = load_twist(p)?;
            (file.value.twist(p)?, file.bytes)
        }
        None => (Twist::new(t.dim(), []).map_err(|e| algebra_error(path, e))?, Vec::new()),
    };
    if h.dim() != t.dim() {
        return Err(InputError::Usage(format!("twist has dim {}, algebra has dim {}", h.dim(), t.dim())));
    }
    let theta = build_theta(&t, &h).map_err(|e| algebra_error(path, e))?;
    let verdict = structure_check(&theta).map_err(|e| algebra_error(path, e))?;
    let twisted = twisted_bracket(&t, &h).map_err(|e| algebra_error(path, e))?;
    let leibniz = is_leibniz(&twisted);
    let mut r = Report::new("structure", shipped(), None, &[&bytes, &twist_bytes]);
    r.output(Output::element("theta", &theta.to_tensor()));
    let basis = theta.plane().basis().clone();
    let mut s = Verdict::new("structure", "{theta,theta} = 0");
    s.checked = 1;
    match &verdict {
        StructureVerdict::Degenerate => s.count("degenerate"),
        StructureVerdict::Pass => {}
        StructureVerdict::NotCubic(d) => s.fail(Witness::note(format!("theta has degrees {d:?}"))),
        StructureVerdict::Fail(w, c) => s.fail(Witness::with_value("first nonzero value of {theta,theta}", &basis, w, c)),
    }
    r.push(s);
    let mut l = Verdict::new("twisted", "the twisted bracket on g + g* is Leibniz");
    l.checked = twisted.dim().pow(3);
    if let Some(bad) = leibniz_identity_check(&twisted) {
        l.fail(Witness::with_element(format!("lhs - rhs at {}", triple(bad.triple)), &bad.residual()));
    }
    r.push(l);
    let mut agree = Verdict::new("agreement", "both checks give the same answer");
    agree.check(verdict.passed() == leibniz, || Witness::note("the structure check and the Leibniz check disagree"));
    r.push(agree);
    Ok(r)
}

fn metric_inputs(alg: &Path, m: &Path) -> Result<(Vec<u8>, Vec<u8>, LeibnizTable, loday_core::Metric), InputError> {
    let (bytes, t) = leibniz_table(alg)?;
    let file = load_metric(m)?;
    let metric = file.value.metric(m)?;
    if metric.dim() != t.dim() {
        return Err(InputError::Usage(format!("metric has dim {}, algebra has dim {}", metric.dim(), t.dim())));
    }
    Ok((bytes, file.bytes, t, metric))
}

pub fn metric(alg: &Path, m: &Path) -> Result<Report, InputError> {
    let (ab, mb, t, metric) = metric_inputs(alg, m)?;
    let err = |e| algebra_error(alg, e);
    let plane = SymplecticPlane::new(t.dim()).map_err(err)?;
    let g = metric_function(&plane, &metric).map_err(err)?;
    let gsi = gsi_check(&t, &metric).map_err(err)?;
    let graph = gsi_graph_check(&t, &metric).map_err(err)?;
    let mut r = Report::new("metric", shipped(), None, &[&ab, &mb]);
    r.output(Output::element("g", &g.to_tensor()));
    let mut v = Verdict::new("gsi", "g([x1,x2],x3) + g(x2,[x1,x3]) = g(x1,[x2,x3]+[x3,x2])");
    v.checked = t.dim().pow(3);
    if let Some(bad) = gsi {
        v.fail(Witness::note(format!("fails at {}", triple(bad))));
    }
    r.push(v);
    let mut gr = Verdict::new("graph", "the graph of g is a subalgebra of g + g*");
    gr.checked = t.dim().pow(2);
    if let Some([i, j]) = graph {
        gr.fail(Witness::note(format!("bracket of graph vectors (e{}, e{}) leaves the graph", i + 1, j + 1)));
    }
    r.push(gr);
    if is_leibniz(&t) {
        let mu = build_mu(&t).map_err(err)?;
        let bracket = poisson(&mu, &g).map_err(err)?;
        r.output(Output::element("{mu,g}", &bracket.to_tensor()));
        let mut b = Verdict::new("coboundary", "{mu,g} = 0");
        b.check(bracket.is_zero(), || Witness::with_element("{mu,g}", &bracket.to_tensor()));
        r.push(b);
        let mut agree = Verdict::new("agreement", "gsi, graph and {mu,g} agree");
        agree.check(gsi.is_none() == bracket.is_zero() && gsi.is_none() == graph.is_none(), || {
            Witness::note("the three criteria disagree")
        });
        r.push(agree);
    } else {
        let mut l = Verdict::new("leibniz", "the algebra is Leibniz, so {mu,g} is defined as a coboundary");
        l.fail(Witness::note("the bracket is not Leibniz"));
        r.push(l);
    }
    Ok(r)
}

pub fn flow(alg: &Path, m: &Path) -> Result<Report, InputError> {
    let (ab, mb, t, metric) = metric_inputs(alg, m)?;
    let err = |e| algebra_error(alg, e);
    let mut r = Report::new("flow", shipped(), None, &[&ab, &mb]);
    if !is_leibniz(&t) {
        let mut l = Verdict::new("leibniz", "{mu,mu} = 0");
        l.fail(Witness::note("the bracket is not Leibniz"));
        r.push(l);
        return Ok(r);
    }
    let plane = SymplecticPlane::new(t.dim()).map_err(err)?;
    let g_inv = inverse_metric_function(&plane, &metric).map_err(|e| algebra_error(m, e))?;
    let mu = build_mu(&t).map_err(err)?;
    let f = flow_transform(&mu, &g_inv).map_err(err)?;
    let gsi = gsi_check(&t, &metric).map_err(err)?;
    r.output(Output::element("nu = {mu,g^-1}", &f.nu.to_tensor()));
    r.output(Output::element("{{mu,g^-1},g^-1}", &f.second.to_tensor()));
    r.output(Output::element("mu'", &f.transformed.to_tensor()));

    let mut third = Verdict::new("truncation", "{{{mu,g^-1},g^-1},g^-1} = 0");
    third.check(f.third.is_zero(), || Witness::with_element("third term", &f.third.to_tensor()));
    r.push(third);
    let mut inv = Verdict::new("gsi", "g is a generalized symmetric invariant metric");
    inv.checked = t.dim().pow(3);
    if let Some(bad) = gsi {
        inv.fail(Witness::note(format!("fails at {}", triple(bad))));
    }
    r.push(inv);
    let mut quad = Verdict::new("quadratic", "the quadratic term vanishes exactly when g is invariant");
    quad.check(gsi.is_none() == f.second.is_zero(), || {
        Witness::with_element("quadratic term", &f.second.to_tensor())
    });
    r.push(quad);
    let (nu_nu, sum_sum) = double_brackets(&mu, &f.nu).map_err(err)?;
    let mut double = Verdict::new("double", "{nu,nu} = 0 and {mu+nu,mu+nu} = 0");
    double.check(nu_nu.is_zero(), || Witness::with_element("{nu,nu}", &nu_nu.to_tensor()));
    double.check(sum_sum.is_zero(), || Witness::with_element("{mu+nu,mu+nu}", &sum_sum.to_tensor()));
    r.push(double);
    Ok(r)
}

pub fn convention_search(dim: usize, max_len: usize) -> Result<Report, InputError> {
    if dim == 0 || max_len < 3 {
        return Err(InputError::Usage("convention search needs dim >= 1 and max-len >= 3".into()));
    }
    let s = search(dim, max_len);
    let canonical = format!("dim={dim};max-len={max_len}");
    let mut r = Report::new("convention-search", shipped(), None, &[canonical.as_bytes()])
        .parameter("dim", dim)
        .parameter("max-len", max_len);
    r.output(Output::text("transcript", &s.transcript()));
    let passing = s.passing();
    let mut v = Verdict::new("shipped", "the shipped convention is the only passing one");
    v.checked = s.reports.len();
    if passing != [SignPolicy::SHIPPED] {
        let ids: Vec<&str> = passing.iter().map(|p| p.id()).collect();
        v.fail(Witness::note(format!("passing conventions: [{}]", ids.join(", "))));
    }
    r.push(v);
    Ok(r)
}
