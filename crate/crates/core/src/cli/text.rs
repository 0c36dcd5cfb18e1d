//! Human-readable report.

use std::fmt::Write;

use num_complex::Complex64;

use crate::detector::{DetectionReport, Method, RunCoefficients, RunRecord};
use crate::nonproper::ValueSet;

fn complex(c: &Complex64) -> String {
    if c.im == 0.0 {
        format!("{}", c.re)
    } else if c.re == 0.0 {
        format!("{}i", c.im)
    } else {
        let sign = if c.im < 0.0 { '-' } else { '+' };
        format!("{} {sign} {}i", c.re, c.im.abs())
    }
}

fn root_list(roots: &[Complex64]) -> String {
    if roots.is_empty() {
        return "{}".into();
    }
    let parts: Vec<String> = roots.iter().map(complex).collect();
    format!("{{{}}}", parts.join(", "))
}

fn flags(v: &ValueSet) -> String {
    let parts: Vec<String> = v.flags().iter().map(|f| f.to_string()).collect();
    parts.join(", ")
}

fn value_set(out: &mut String, indent: &str, v: &ValueSet) {
    let _ = writeln!(out, "{indent}rho       {}", v.rho());
    if v.is_empty() {
        let _ = writeln!(out, "{indent}values    {{}}");
    } else {
        let rational: Vec<String> = v.rational_roots().iter().map(|r| r.to_string()).collect();
        let _ = writeln!(out, "{indent}rational  {{{}}}", rational.join(", "));
        let mark = if v.approx_converged() {
            ""
        } else {
            "  (unverified)"
        };
        let _ = writeln!(
            out,
            "{indent}approx    {}{mark}",
            root_list(v.approx_roots())
        );
    }
    if !v.flags().is_empty() {
        let _ = writeln!(out, "{indent}flags     {}", flags(v));
    }
}

fn run(out: &mut String, k: usize, r: &RunRecord) {
    let _ = write!(out, "run {}  seed {}  dim {}", k + 1, r.seed, r.dimension);
    if !r.rejected_dimensions.is_empty() {
        let _ = write!(out, "  rejected dims {:?}", r.rejected_dimensions);
    }
    if let Some(ms) = r.millis {
        let _ = write!(out, "  {ms} ms");
    }
    out.push('\n');
    if let RunCoefficients::IteratedPolar(_) = r.coefficients {
        for s in &r.steps {
            let _ = writeln!(out, "  step {}  dim {}", s.step, s.dimension);
            value_set(out, "    ", &s.values);
        }
        let _ = writeln!(out, "  union");
    }
    value_set(out, "    ", &r.values);
}

fn bound(b: Option<i128>) -> String {
    b.map_or_else(|| "n/a".into(), |v| v.to_string())
}

pub fn render(r: &DetectionReport) -> String {
    let mut out = String::new();
    let sing = if r.singular_locus_finite {
        "finite"
    } else {
        "not finite"
    };
    let case = match r.method {
        Method::SuperPolar if r.general_case => "general case, ",
        Method::SuperPolar => "special case, ",
        Method::IteratedPolar => "",
    };
    let _ = writeln!(out, "f          {}", r.input);
    let _ = writeln!(
        out,
        "variables  {}  (n = {}, d = {})",
        r.variables.join(", "),
        r.variables.len(),
        r.degree
    );
    let _ = writeln!(
        out,
        "method     {}  ({case}Sing f {sing})",
        r.method.as_str()
    );
    let _ = writeln!(
        out,
        "config     seed {}, runs {}, coefficient bound {}",
        r.config.seed, r.config.runs, r.config.coeff_bound
    );
    out.push('\n');
    for (k, rec) in r.runs.iter().enumerate() {
        run(&mut out, k, rec);
    }
    out.push('\n');
    let _ = writeln!(out, "S (intersection of runs)");
    value_set(&mut out, "    ", &r.s_final);
    let _ = writeln!(out, "critical values");
    value_set(&mut out, "    ", &r.critical_values);
    let _ = writeln!(
        out,
        "S minus critical values (approximate)  {}",
        root_list(&r.s_minus_critical_approx)
    );
    out.push('\n');
    let _ = writeln!(out, "bounds");
    let _ = writeln!(out, "    #NK        <= {}", bound(r.bounds.nk));
    let _ = writeln!(
        out,
        "    #NK        <= {}  (super-polar, if NK is nonempty)",
        bound(r.bounds.superpolar)
    );
    let _ = writeln!(out, "    #K         <= {}", bound(r.bounds.kinf));
    if !r.config.sing.components().is_empty() {
        let _ = writeln!(out, "    components {}", r.config.sing);
    }
    for w in &r.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    out
}
