use crate::abgroups::{
    graded_ext, graded_hom, shifted_ext, FgAbGroup, GradedExt, GradedHom, GroupHom,
};
use crate::error::{Error, Result};
use crate::intlinalg::{lattice_contains, solve, Int, IntMatrix, Subquotient};
use crate::percomplex::{
    homotopy_classes, induced_between, induced_on_homology, mapping_cone, ChainMap,
    HomotopyClasses, PeriodicComplex,
};

use super::ideal::is_phantom;

/// The coefficient sequence `0 → extPart → [A, B] → homPart → 0`, with `[A, B]`
/// computed directly from chain maps.
#[derive(Clone, Debug)]
pub struct UctReport {
    pub hom_part: GradedHom,
    pub ext_part: GradedExt,
    pub middle: HomotopyClasses,
    pub natural_map: GroupHom,
    pub kernel: Subquotient,
}

impl UctReport {
    fn check(&self, phantoms: &PhantomSubgroup) -> Result<()> {
        let fail = |what: &str| Err(Error::InvariantViolated(what.to_string()));
        if !self.natural_map.is_surjective() {
            return fail("natural map to Hom is not surjective");
        }
        if !self.kernel.group().is_isomorphic(self.ext_part.group()) {
            return fail("kernel of the natural map differs from the Ext term");
        }
        let (k, p) = (self.kernel.basis(), phantoms.kernel.basis());
        if !lattice_contains(k, p) || !lattice_contains(p, k) {
            return fail("kernel of the natural map differs from the phantom subgroup");
        }
        let middle = self.middle.group();
        let hom = self.hom_part.group();
        if middle.rank() != hom.rank() {
            return fail("rank of [A, B] differs from rank of Hom");
        }
        if middle.torsion_order() != self.ext_part.group().torsion_order() * hom.torsion_order() {
            return fail("torsion order of [A, B] does not split");
        }
        Ok(())
    }
}

/// The homomorphism `[A, B] → Hom(H A, H B)` taking a class to its action on homology.
pub fn natural_map(classes: &HomotopyClasses, hom_part: &GradedHom) -> Result<GroupHom> {
    let cols = classes
        .generators()
        .iter()
        .map(|f| {
            let h = induced_on_homology(f);
            hom_part.element_of(h.even.matrix(), h.odd.matrix())
        })
        .collect::<Result<Vec<_>>>()?;
    GroupHom::new(
        classes.group().clone(),
        hom_part.group().clone(),
        IntMatrix::from_columns(hom_part.group().num_generators(), &cols),
    )
}

pub fn uct_sequence(a: &PeriodicComplex, b: &PeriodicComplex) -> Result<UctReport> {
    let (ha, hb) = (a.homology_groups(), b.homology_groups());
    let hom_part = graded_hom(&ha, &hb);
    let ext_part = shifted_ext(&ha, &hb);
    let middle = homotopy_classes(a, b);
    let natural_map = natural_map(&middle, &hom_part)?;
    let kernel = natural_map.kernel();
    let report = UctReport {
        hom_part,
        ext_part,
        middle,
        natural_map,
        kernel,
    };
    report.check(&phantom_subgroup(a, b)?)?;
    Ok(report)
}

/// The classes in `[A, B]` acting trivially on homology.
#[derive(Clone, Debug)]
pub struct PhantomSubgroup {
    pub classes: HomotopyClasses,
    pub kernel: Subquotient,
}

impl PhantomSubgroup {
    pub fn group(&self) -> &FgAbGroup {
        self.kernel.group()
    }

    /// Chain-map representatives of the generators of [`Self::group`].
    pub fn generators(&self) -> Vec<ChainMap> {
        self.kernel
            .basis()
            .columns()
            .map(|c| self.classes.representative(&c))
            .collect()
    }
}

/// Phantom classes, found by evaluating each class on cycle representatives
/// of the homology generators of `a` and testing the values in `H(b)`.
pub fn phantom_subgroup(a: &PeriodicComplex, b: &PeriodicComplex) -> Result<PhantomSubgroup> {
    let classes = homotopy_classes(a, b);
    let (ha, hb) = (a.homology(), b.homology());
    // target: one copy of H_d(B) per generator of H_d(A)
    let copies = |d: usize| {
        let g = hb.degree(d).group();
        (0..ha.degree(d).basis().cols()).map(move |_| g.clone())
    };
    let parts: Vec<FgAbGroup> = copies(0).chain(copies(1)).collect();
    let target = FgAbGroup::direct_sum(&parts.iter().collect::<Vec<_>>());
    let mut cols = Vec::new();
    for f in classes.generators() {
        let mut col = Vec::new();
        for (d, chain) in [(0, f.f_even()), (1, f.f_odd())] {
            for z in ha.degree(d).basis().columns() {
                let w = chain.mul_vec(&z);
                col.extend(
                    hb.degree(d)
                        .coords_of(&w)
                        .ok_or_else(|| Error::NotAChainMap("cycle not sent to a cycle".into()))?,
                );
            }
        }
        cols.push(col);
    }
    let eval = GroupHom::new(
        classes.group().clone(),
        target.clone(),
        IntMatrix::from_columns(target.num_generators(), &cols),
    )?;
    Ok(PhantomSubgroup {
        kernel: eval.kernel(),
        classes,
    })
}

/// The value of `κ`: a class in `Ext(H₀A, H₀B) ⊕ Ext(H₁A, H₁B)`.
#[derive(Clone, Debug)]
pub struct KappaClass {
    pub ext: GradedExt,
    pub class: Vec<Int>,
}

impl KappaClass {
    pub fn is_zero(&self) -> bool {
        self.ext.group().is_zero_vector(&self.class)
    }
}

/// Solve `m·x ≡ y` modulo the relations of `m`'s target group; returns `x`.
fn preimage(m: &GroupHom, y: &[Int]) -> Option<Vec<Int>> {
    let stacked = IntMatrix::hstack(
        m.target().num_generators(),
        &[m.matrix(), m.target().presentation()],
    );
    let x = solve(&stacked, y)?;
    Some(x[..m.source().num_generators()].to_vec())
}

/// `κ(f)` for a phantom `f: A → ΣB`: the extension class of the homology of
/// the cone, `0 → H_{d}(B) → H_{d+1}(cone f) → H_{d}(A) → 0`.
pub fn kappa(f: &ChainMap) -> Result<KappaClass> {
    if !is_phantom(f) {
        return Err(Error::NotPhantom);
    }
    let a = f.source();
    let b = f.target().suspension();
    let (ha, hb) = (a.homology(), b.homology());
    let ext = graded_ext(&ha.groups(), &hb.groups());
    let cone = mapping_cone(f);
    let hc = cone.cone.homology();
    let mut class = Vec::new();
    for j in 0..2 {
        let k = 1 - j;
        let (incl, proj) = if k == 0 {
            (cone.inclusion.f_even(), cone.projection.f_even())
        } else {
            (cone.inclusion.f_odd(), cone.projection.f_odd())
        };
        let iota = induced_between(hb.degree(j), hc.degree(k), incl)?;
        let pi = induced_between(hc.degree(k), ha.degree(j), proj)?;
        let g = ha.degree(j).group();
        let gens = g.canonical_generators();
        let lifts: Vec<Vec<Int>> = gens
            .columns()
            .map(|c| preimage(&pi, &c))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::InvariantViolated("cone does not surject onto H(A)".into()))?;
        let lifts = IntMatrix::from_columns(pi.source().num_generators(), &lifts);
        let rels = &lifts * &g.canonical_relations();
        let n_torsion = g.torsion().len();
        let mut values = Vec::with_capacity(n_torsion);
        for r in rels.columns() {
            let v = preimage(&iota, &r).ok_or_else(|| {
                Error::InvariantViolated("relation does not come from H(B)".into())
            })?;
            values.push(v);
        }
        class.extend(ext.parts[j].class_of_cocycle(&values)?);
    }
    Ok(KappaClass { ext, class })
}

/// `κ` on the phantom subgroup of `[A, ΣB]`, as a homomorphism into
/// `Ext(H₀A, H₀B) ⊕ Ext(H₁A, H₁B)`.
pub fn kappa_map(a: &PeriodicComplex, b: &PeriodicComplex) -> Result<GroupHom> {
    let phantoms = phantom_subgroup(a, &b.suspension())?;
    let ext = graded_ext(&a.homology_groups(), &b.homology_groups());
    let cols = phantoms
        .generators()
        .iter()
        .map(|f| kappa(f).map(|k| k.class))
        .collect::<Result<Vec<_>>>()?;
    GroupHom::new(
        phantoms.group().clone(),
        ext.group().clone(),
        IntMatrix::from_columns(ext.group().num_generators(), &cols),
    )
}
