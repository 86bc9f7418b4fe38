use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use homkit::abgroups::{
    ext1, graded_tensor, graded_tor, hom, is_exact_at, tensor, tor1, FgAbGroup,
};
use homkit::intlinalg::snf as smith;
use homkit::json::*;
use homkit::percomplex::{
    homotopy_classes, mapping_cone, tensor_complex, triangle_homology_sequence, ChainMap,
};
use homkit::relhom::{
    classify as classify_map, ideal_ext, kappa as kappa_of, projective_resolution, uct_sequence,
};
use homkit::repmod::{ext_over_ring, hochschild, pv_sequence, tor_over_ring, PvReport, Variant};
use homkit::{random, Error};

use crate::{GroupOp, VariantArg};

#[derive(Debug)]
pub enum CliError {
    /// Rejected input: exit status 2.
    Validation { code: String, message: String },
    /// A computation broke one of its own invariants: exit status 1.
    Internal { message: String },
}

impl CliError {
    pub fn io(path: &Path, e: &std::io::Error) -> Self {
        CliError::Validation {
            code: "io_error".into(),
            message: format!("{}: {e}", path.display()),
        }
    }

    pub fn status(&self) -> u8 {
        match self {
            CliError::Validation { .. } => 2,
            CliError::Internal { .. } => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        let (code, message) = match self {
            CliError::Validation { code, message } => (code.as_str(), message.as_str()),
            CliError::Internal { message } => ("internal_error", message.as_str()),
        };
        json!({"error": {"code": code, "message": message}})
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvariantViolated(_) => CliError::Internal {
                message: e.to_string(),
            },
            _ => CliError::Validation {
                code: e.code().into(),
                message: e.to_string(),
            },
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Input documents read so far, plus the options that affect the result;
/// both feed the digest.
#[derive(Default)]
pub struct Inputs {
    hasher: Sha256,
}

impl Inputs {
    pub fn read(&mut self, path: &Path) -> Result<Value> {
        let bytes = std::fs::read(path).map_err(|e| CliError::io(path, &e))?;
        self.hasher.update((bytes.len() as u64).to_le_bytes());
        self.hasher.update(&bytes);
        serde_json::from_slice(&bytes).map_err(|e| CliError::Validation {
            code: "malformed_json".into(),
            message: format!("{}: {e}", path.display()),
        })
    }

    pub fn read_all(&mut self, paths: &[impl AsRef<Path>]) -> Result<Vec<Value>> {
        paths.iter().map(|p| self.read(p.as_ref())).collect()
    }

    pub fn option(&mut self, key: &str, value: &str) {
        self.hasher.update(format!("--{key}={value}\n").as_bytes());
    }

    pub fn digest(self) -> String {
        format!("{:x}", self.hasher.finalize())
    }
}

/// One self-contained chain-map document, or (source, target, map).
fn chain_map(docs: &[Value]) -> Result<ChainMap> {
    match docs {
        [one] => Ok(standalone_chain_map_from_json(one)?),
        [s, t, f] => Ok(chain_map_from_json(
            f,
            &complex_from_json(s)?,
            &complex_from_json(t)?,
        )?),
        _ => Err(CliError::Validation {
            code: "invalid_input".into(),
            message: "expected a chain-map file, or source, target and map files".into(),
        }),
    }
}

pub fn snf(doc: Value) -> Result<Value> {
    let m = matrix_from_json(&doc)?;
    let d = smith(&m);
    Ok(json!({
        "diagonal": ints_to_json(&d.diagonal()),
        "rank": d.rank(),
        "s": matrix_to_json(&d.s),
        "u": matrix_to_json(&d.u),
        "v": matrix_to_json(&d.v),
    }))
}

pub fn group_op(op: GroupOp, a: &Value, b: &Value) -> Result<Value> {
    let (a, b) = (group_from_json(a)?, group_from_json(b)?);
    Ok(match op {
        GroupOp::Hom => group_to_json(hom(&a, &b).group()),
        GroupOp::Ext => group_to_json(ext1(&a, &b).group()),
        GroupOp::Tensor => group_to_json(&tensor(&a, &b)),
        GroupOp::Tor => group_to_json(&tor1(&a, &b)),
        GroupOp::Iso => json!({"isomorphic": a.is_isomorphic(&b)}),
    })
}

pub fn homology(doc: Value) -> Result<Value> {
    Ok(graded_to_json(&complex_from_json(&doc)?.homology_groups()))
}

pub fn hoclasses(a: &Value, b: &Value) -> Result<Value> {
    let (a, b) = (complex_from_json(a)?, complex_from_json(b)?);
    Ok(group_to_json(homotopy_classes(&a, &b).group()))
}

pub fn cone(docs: &[Value]) -> Result<Value> {
    let f = chain_map(docs)?;
    let c = mapping_cone(&f);
    Ok(json!({
        "cone": complex_to_json(&c.cone),
        "homology": graded_to_json(&c.cone.homology_groups()),
        "inclusion": chain_map_to_json(&c.inclusion),
        "projection": chain_map_to_json(&c.projection),
    }))
}

pub fn uct(a: &Value, b: &Value) -> Result<Value> {
    let (a, b) = (complex_from_json(a)?, complex_from_json(b)?);
    let r = uct_sequence(&a, &b)?;
    Ok(json!({
        "hom_part": group_to_json(r.hom_part.group()),
        "ext_part": group_to_json(r.ext_part.group()),
        "middle": group_to_json(r.middle.group()),
        "kernel": group_to_json(r.kernel.group()),
        "natural_map": matrix_to_json(r.natural_map.matrix()),
    }))
}

pub fn ext(a: &Value, b: &Value, n: usize) -> Result<Value> {
    let (a, b) = (complex_from_json(a)?, complex_from_json(b)?);
    Ok(group_to_json(&ideal_ext(&a, &b, n)?))
}

pub fn resolve(doc: Value) -> Result<Value> {
    let a = complex_from_json(&doc)?;
    let r = projective_resolution(&a);
    if !r.is_exact()? {
        return Err(CliError::Internal {
            message: "resolution is not exact".into(),
        });
    }
    Ok(json!({
        "p0": complex_to_json(&r.p0),
        "p1": complex_to_json(&r.p1),
        "delta0": chain_map_to_json(&r.delta0),
        "delta1": chain_map_to_json(&r.delta1),
    }))
}

pub fn classify(docs: &[Value]) -> Result<Value> {
    let f = chain_map(docs)?;
    Ok(serde_json::to_value(classify_map(&f)).expect("flags serialize"))
}

pub fn kappa(docs: &[Value]) -> Result<Value> {
    let f = chain_map(docs)?;
    let k = kappa_of(&f)?;
    let g = k.ext.group();
    Ok(json!({
        "ext": group_to_json(g),
        "class": ints_to_json(&k.class),
        "normal_form": ints_to_json(&g.normal_form(&k.class)),
        "is_zero": k.is_zero(),
    }))
}

pub fn ring_ext(m: &Value, other: &Value, n: usize) -> Result<Value> {
    let (m, o) = (module_from_json(m)?, module_from_json(other)?);
    Ok(group_to_json(&ext_over_ring(&m, &o, n)?))
}

pub fn ring_tor(m: &Value, other: &Value, n: usize) -> Result<Value> {
    let (m, o) = (module_from_json(m)?, module_from_json(other)?);
    Ok(group_to_json(&tor_over_ring(&m, &o, n)?))
}

/// Input: `{"group", "lambda", "rho"}`.
pub fn hh(doc: Value, n: usize, variant: VariantArg) -> Result<Value> {
    let field = |k: &str| {
        doc.get(k).ok_or_else(|| CliError::Validation {
            code: "invalid_input".into(),
            message: format!("missing field \"{k}\""),
        })
    };
    let g = group_from_json(field("group")?)?;
    let lambda = matrix_from_json(field("lambda")?)?;
    let rho = matrix_from_json(field("rho")?)?;
    let v = match variant {
        VariantArg::Homology => Variant::Homology,
        VariantArg::Cohomology => Variant::Cohomology,
    };
    Ok(group_to_json(&hochschild(&g, &lambda, &rho, n, v)?))
}

fn pv_to_json(r: &PvReport) -> Value {
    let pair = |gs: &[FgAbGroup; 2]| json!([group_to_json(&gs[0]), group_to_json(&gs[1])]);
    json!({
        "coker_end": pair(&r.coker_end),
        "ker_end": pair(&r.ker_end),
        "middle": pair(&r.middle),
        "nodes": PvReport::NODES,
        "exact": (0..6).map(|i| r.is_exact_at(i)).collect::<Vec<_>>(),
    })
}

/// Input: `{"k": graded group, "alpha_even", "alpha_odd"}`.
pub fn pv(doc: Value) -> Result<Value> {
    let get = |k: &str| {
        doc.get(k).ok_or_else(|| CliError::Validation {
            code: "invalid_input".into(),
            message: format!("missing field \"{k}\""),
        })
    };
    let k = graded_from_json(get("k")?)?;
    let a0 = matrix_from_json(get("alpha_even")?)?;
    let a1 = matrix_from_json(get("alpha_odd")?)?;
    Ok(pv_to_json(&pv_sequence(&k, &a0, &a1)?))
}

pub fn kunneth_check(a: &Value, b: &Value) -> Result<Value> {
    let (a, b) = (complex_from_json(a)?, complex_from_json(b)?);
    let h = tensor_complex(&a, &b).homology_groups();
    let (ha, hb) = (a.homology_groups(), b.homology_groups());
    let t = graded_tensor(&ha, &hb);
    let tor = graded_tor(&ha, &hb).suspension();
    Ok(json!({
        "homology": graded_to_json(&h),
        "tensor_part": graded_to_json(&t),
        "tor_part": graded_to_json(&tor),
        "isomorphic": h.is_isomorphic(&t.direct_sum(&tor)),
    }))
}

pub fn selftest(seed: u64) -> Result<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    let mut record = |name: &str, instances: usize, passed: usize| {
        checks.push(json!({"name": name, "instances": instances, "passed": passed}));
        passed == instances
    };
    let mut ok = true;

    let n = 50;
    let passed = (0..n)
        .filter(|_| {
            let (r, c) = (
                rand::Rng::gen_range(&mut rng, 0..=5),
                rand::Rng::gen_range(&mut rng, 0..=5),
            );
            let m = random::matrix(&mut rng, r, c, 9);
            let d = smith(&m);
            &(&d.u * &m) * &d.v == d.s
        })
        .count();
    ok &= record("smith_identity", n, passed);

    let n = 30;
    let passed = (0..n)
        .filter(|_| {
            let a = random::complex(&mut rng, 3, 3);
            let b = random::complex(&mut rng, 3, 3);
            uct_sequence(&a, &b).is_ok()
        })
        .count();
    ok &= record("coefficient_sequence", n, passed);

    let passed = (0..n)
        .filter(|_| {
            let a = random::complex(&mut rng, 3, 3);
            let b = random::complex(&mut rng, 3, 3);
            let f = random::chain_map(&mut rng, &a, &b, 3);
            let s = triangle_homology_sequence(&f);
            (0..6).all(|i| is_exact_at(&s[i], &s[(i + 1) % 6]))
        })
        .count();
    ok &= record("triangle_exactness", n, passed);

    let passed = (0..n)
        .filter(|_| {
            let a = random::complex(&mut rng, 3, 3);
            let b = random::complex(&mut rng, 3, 3);
            let (ha, hb) = (a.homology_groups(), b.homology_groups());
            let want = graded_tensor(&ha, &hb).direct_sum(&graded_tor(&ha, &hb).suspension());
            tensor_complex(&a, &b)
                .homology_groups()
                .is_isomorphic(&want)
        })
        .count();
    ok &= record("kunneth", n, passed);

    let passed = (0..n)
        .filter(|_| {
            let k = random::graded_group(&mut rng, 3, 6);
            let a0 = random::automorphism(&mut rng, &k.even, 6);
            let a1 = random::automorphism(&mut rng, &k.odd, 6);
            pv_sequence(&k, &a0, &a1).is_ok()
        })
        .count();
    ok &= record("six_term_exactness", n, passed);

    if !ok {
        return Err(CliError::Internal {
            message: format!("self-test failed: {}", Value::Array(checks)),
        });
    }
    Ok(json!({"seed": seed, "checks": checks, "all_passed": true}))
}
