//! Pure braid mapping classes of the holed disk `D_n`, separating
//! embeddings into a surface, and the Johnson and Magnus homomorphisms.
//!
//! `π_1(D_n)` is free on `y_1..y_n`. A disk mapping class is stored as its
//! induced automorphism together with arc prefixes `u_j`, where
//! `f(A_j) = u_j A_j`; boundary fixing forces `f(y_j) = u_j y_j u_j^-1`.

use std::collections::BTreeMap;
use std::fmt;

use crate::derived::{
    derived_class, derived_class_limited, module_act_limited, ActionMode, DerivedGradedClass, Limits,
};
use crate::error::{Error, Result};
use crate::groupring::GroupRingElement;
use crate::lcs::{collect, lcs_weight, GradedClass, LcsWeight};
use crate::parse::BraidWord;
use crate::words::{Endomorphism, FreeWord};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiskMappingClass {
    endo: Endomorphism,
    arcs: Vec<FreeWord>,
}

fn y(i: u32) -> FreeWord {
    FreeWord::generator(i)
}

impl DiskMappingClass {
    pub fn identity(n: u32) -> Self {
        DiskMappingClass {
            endo: Endomorphism::identity(n),
            arcs: vec![FreeWord::identity(); n as usize],
        }
    }

    /// Builds a class from arc prefixes alone; the automorphism is forced
    /// by boundary fixing.
    pub fn from_arc_prefixes(arcs: Vec<FreeWord>) -> Result<Self> {
        let images = arcs
            .iter()
            .enumerate()
            .map(|(j, u)| y(j as u32 + 1).conjugate_by(u))
            .collect();
        Ok(DiskMappingClass {
            endo: Endomorphism::new(images)?,
            arcs,
        })
    }

    /// The Dehn twist `f_{i,n}` (sign `+1`) or its inverse (sign `-1`).
    pub fn braid_generator(i: u32, n: u32, sign: i8) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::InvalidBraidGenerator { i, n });
        }
        let (yi, yn) = (y(i), y(n));
        let (main, middle) = if sign > 0 {
            (&yn * &yi, FreeWord::commutator(&yi, &yn).inverse())
        } else {
            (
                &yi.inverse() * &yn.inverse(),
                FreeWord::commutator(&yi.inverse(), &yn.inverse()),
            )
        };
        let arcs = (1..=n)
            .map(|j| {
                if j == i || j == n {
                    main.clone()
                } else if j > i {
                    middle.clone()
                } else {
                    FreeWord::identity()
                }
            })
            .collect();
        Self::from_arc_prefixes(arcs)
    }

    /// The image of a braid word under `ψ`, which reverses the order of the
    /// generators: `ψ(A_{p_1} ... A_{p_m}) = f_{p_m} ∘ ... ∘ f_{p_1}`.
    pub fn from_braid_word(w: &BraidWord) -> Result<Self> {
        let mut f = Self::identity(w.strands);
        for &(i, s) in &w.letters {
            f = Self::braid_generator(i, w.strands, s)?.compose(&f)?;
        }
        Ok(f)
    }

    pub fn strands(&self) -> u32 {
        self.endo.rank()
    }

    pub fn endo(&self) -> &Endomorphism {
        &self.endo
    }

    /// `u_j`, 1-based.
    pub fn arc_prefix(&self, j: u32) -> &FreeWord {
        &self.arcs[j as usize - 1]
    }

    pub fn arc_prefixes(&self) -> &[FreeWord] {
        &self.arcs
    }

    /// `self ∘ other`, with `u_j(f∘g) = f(u_j(g)) u_j(f)`.
    pub fn compose(&self, other: &DiskMappingClass) -> Result<Self> {
        let endo = self.endo.compose(&other.endo)?;
        let arcs = other
            .arcs
            .iter()
            .zip(&self.arcs)
            .map(|(ug, uf)| Ok(&self.endo.apply(ug)? * uf))
            .collect::<Result<_>>()?;
        Ok(DiskMappingClass { endo, arcs })
    }

    /// `f(y_j) = u_j y_j u_j^-1` for every `j`.
    pub fn is_boundary_consistent(&self) -> bool {
        self.arcs
            .iter()
            .enumerate()
            .all(|(j, u)| *self.endo.image(j as u32 + 1) == y(j as u32 + 1).conjugate_by(u))
    }

    pub fn is_identity(&self) -> bool {
        self.arcs.iter().all(|u| u.is_identity())
    }
}

/// The mapping class `ψ(b^-1 a^-1 b a) = [ψ(a), ψ(b)]`.
pub fn commutator_class(a: &BraidWord, b: &BraidWord) -> Result<DiskMappingClass> {
    if a.strands != b.strands {
        return Err(Error::SizeMismatch {
            left: a.strands,
            right: b.strands,
        });
    }
    let mut letters = b.inverse().letters;
    letters.extend(a.inverse().letters);
    letters.extend(b.letters.iter().copied());
    letters.extend(a.letters.iter().copied());
    DiskMappingClass::from_braid_word(&BraidWord {
        strands: a.strands,
        letters,
    })
}

/// Loop and arc levels of a disk mapping class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JohnsonLevel {
    /// Least weight of `f(y) y^-1` over the generators.
    pub loop_level: LcsWeight,
    /// `loop_level` combined with the least weight of the arc prefixes.
    pub full_level: LcsWeight,
}

impl fmt::Display for JohnsonLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "loop {} / full {}", self.loop_level, self.full_level)
    }
}

pub fn johnson_level(f: &DiskMappingClass, cap: usize) -> Result<JohnsonLevel> {
    let mut loop_level = LcsWeight::Identity;
    for j in 1..=f.strands() {
        let d = f.endo.image(j) * &y(j).inverse();
        loop_level = loop_level.min(lcs_weight(&d, cap)?);
    }
    let mut full_level = loop_level;
    for u in &f.arcs {
        full_level = full_level.min(lcs_weight(u, cap)?);
    }
    Ok(JohnsonLevel {
        loop_level,
        full_level,
    })
}

/// `τ_k(f)`: the class of each arc prefix in `G_k / G_{k+1}`.
pub fn tau_disk(f: &DiskMappingClass, k: usize) -> Result<Vec<GradedClass<u32>>> {
    let level = johnson_level(f, k.max(2))?;
    if !level.full_level.at_least(k) {
        return Err(Error::JohnsonLevel {
            required: k,
            actual: level.full_level.to_string(),
        });
    }
    f.arcs.iter().map(|u| collect(u, k)).collect()
}

/// A separating embedding of `D_n` into a surface of genus `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub genus: u32,
    pub holes: u32,
    /// `i_*(y_j)`, words in the `2g` surface generators.
    pub y_images: Vec<FreeWord>,
    /// Surface generator index → arc it crosses.
    pub arc_of_generator: BTreeMap<u32, u32>,
    /// Letter used to print surface generators.
    pub symbol: char,
    pub label: String,
}

impl Embedding {
    /// `y_i ↦ [x_{2i-1}, x_{2i}]`; both `x_{2i-1}` and `x_{2i}` cross arc `i`.
    pub fn block(g: u32) -> Result<Self> {
        if g == 0 {
            return Err(Error::UnknownEmbedding("block:g=0".into()));
        }
        let y_images = (1..=g)
            .map(|i| FreeWord::commutator(&y(2 * i - 1), &y(2 * i)))
            .collect();
        let arc_of_generator = (1..=g).flat_map(|i| [(2 * i - 1, i), (2 * i, i)]).collect();
        Ok(Embedding {
            genus: g,
            holes: g,
            y_images,
            arc_of_generator,
            symbol: 'x',
            label: format!("block:g={g}"),
        })
    }

    /// The genus-3 family `i_n` with generators `c_1..c_6`; `c_2` crosses
    /// `A_1` and `c_6` crosses `A_3`.
    pub fn church_farb(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::UnknownEmbedding("church-farb:n=0".into()));
        }
        let c = y;
        let c6n = c(6).pow(n as i64);
        let h = &(&FreeWord::commutator(&c(5), &c(6)) * &FreeWord::commutator(&c(3), &c(4))) * &c(4);
        let a = FreeWord::from_signed(&[3, -4, -3, 6]);
        let y2 = FreeWord::commutator(&a, &(&c(5) * &c6n)).conjugate_by(&h);
        let y3 = FreeWord::commutator(&c(4), &(&(&c(5) * &c6n) * &c(3)));
        Ok(Embedding {
            genus: 3,
            holes: 3,
            y_images: vec![FreeWord::commutator(&c(2), &c(1)), y2, y3],
            arc_of_generator: BTreeMap::from([(2, 1), (6, 3)]),
            symbol: 'c',
            label: format!("church-farb:n={n}"),
        })
    }

    /// Parses `block:g=<g>` or `church-farb:n=<n>`.
    pub fn builtin(spec: &str) -> Result<Self> {
        let unknown = || Error::UnknownEmbedding(spec.to_string());
        let (name, param) = spec.split_once(':').ok_or_else(unknown)?;
        let (key, value) = param.split_once('=').ok_or_else(unknown)?;
        let value: u32 = value.trim().parse().map_err(|_| unknown())?;
        match (name.trim(), key.trim()) {
            ("block", "g") => Self::block(value),
            ("church-farb", "n") => Self::church_farb(value),
            _ => Err(unknown()),
        }
    }

    pub fn rank(&self) -> u32 {
        2 * self.genus
    }

    /// `i_*`: substitutes the `y`-images.
    pub fn push_forward(&self, w: &FreeWord) -> Result<FreeWord> {
        let mut out = FreeWord::identity();
        for l in w.letters() {
            let img = self.y_images.get(l.index() as usize - 1).ok_or(Error::AlphabetMismatch {
                index: l.index(),
                size: self.holes,
            })?;
            if l.is_inverse() {
                out.push_inverse(img);
            } else {
                out.push_word(img);
            }
        }
        Ok(out)
    }

    pub fn arc_of(&self, generator: u32) -> Result<u32> {
        self.arc_of_generator
            .get(&generator)
            .copied()
            .ok_or(Error::NotCrossing { generator })
    }

    /// Extension by the identity: a generator crossing arc `j` goes to
    /// `i_*(u_j) γ i_*(u_j)^-1`, all others are fixed.
    pub fn extend(&self, f: &DiskMappingClass) -> Result<SurfaceMappingClass> {
        if f.strands() != self.holes {
            return Err(Error::SizeMismatch {
                left: self.holes,
                right: f.strands(),
            });
        }
        let images = (1..=self.rank())
            .map(|g| match self.arc_of_generator.get(&g) {
                Some(&j) => Ok(y(g).conjugate_by(&self.push_forward(f.arc_prefix(j))?)),
                None => Ok(y(g)),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SurfaceMappingClass {
            endo: Endomorphism::new(images)?,
            label: self.label.clone(),
        })
    }

    /// `τ'_k` of the extended class on `[γ_i, γ_j]`, via
    /// `(1 - γ_i)(1 - γ_j) (i_*(u_{a_i}) - i_*(u_{a_j}))`.
    pub fn tau_magnus_formula(
        &self,
        f: &DiskMappingClass,
        k: usize,
        pair: (u32, u32),
    ) -> Result<DerivedGradedClass> {
        self.tau_magnus_formula_limited(f, k, pair, &Limits::default())
    }

    pub fn tau_magnus_formula_limited(
        &self,
        f: &DiskMappingClass,
        k: usize,
        pair: (u32, u32),
        limits: &Limits,
    ) -> Result<DerivedGradedClass> {
        let (ai, aj) = (self.arc_of(pair.0)?, self.arc_of(pair.1)?);
        let w = &self.push_forward(f.arc_prefix(ai))? * &self.push_forward(f.arc_prefix(aj))?.inverse();
        let class = derived_class_limited(&w, k, limits)?;
        let one = GroupRingElement::one();
        let r = &(&one - &GroupRingElement::var(pair.0)) * &(&one - &GroupRingElement::var(pair.1));
        module_act_limited(&r, &class, ActionMode::Exact, limits)
    }
}

/// A mapping class of the surface, given by its action on `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceMappingClass {
    pub endo: Endomorphism,
    pub label: String,
}

impl SurfaceMappingClass {
    /// `τ'_k(f)(x) = [f(x) x^-1]` for `x ∈ F'`.
    pub fn tau_magnus_direct(&self, k: usize, x: &FreeWord) -> Result<DerivedGradedClass> {
        let e = crate::groupring::exponent_vector(x, self.endo.rank())?;
        if e.iter().any(|&v| v != 0) {
            return Err(Error::NotInDerived { exponents: e });
        }
        derived_class(&(&self.endo.apply(x)? * &x.inverse()), k)
    }
}

/// The word `[γ_i, γ_j]` in surface generators.
pub fn generator_commutator(i: u32, j: u32) -> FreeWord {
    FreeWord::commutator(&y(i), &y(j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_braid, parse_word};

    fn w(s: &[i32]) -> FreeWord {
        FreeWord::from_signed(s)
    }

    #[test]
    fn generator_tables() {
        let f = DiskMappingClass::braid_generator(1, 3, 1).unwrap();
        assert_eq!(f.endo().image(3), &w(&[3, 1, 3, -1, -3]));
        assert_eq!(f.arc_prefix(3), &w(&[3, 1]));
        assert_eq!(f.arc_prefix(1), &w(&[3, 1]));
        assert_eq!(f.arc_prefix(2), &FreeWord::commutator(&w(&[1]), &w(&[3])).inverse());
        assert!(f.is_boundary_consistent());
        let g = DiskMappingClass::braid_generator(1, 3, -1).unwrap();
        assert!(f.compose(&g).unwrap().is_identity());
        assert!(g.compose(&f).unwrap().is_identity());
        assert!(DiskMappingClass::braid_generator(3, 3, 1).is_err());
    }

    #[test]
    fn inverse_generator_table() {
        for (i, n) in [(1, 3), (2, 3), (1, 4), (2, 4), (3, 4)] {
            let g = DiskMappingClass::braid_generator(i, n, -1).unwrap();
            let (yi, yn) = (y(i), y(n));
            assert_eq!(g.endo().image(n), &yn.conjugate_by(&yi.inverse()));
            assert_eq!(
                g.endo().image(i),
                &(&FreeWord::commutator(&yi.inverse(), &yn.inverse()) * &yi)
            );
        }
    }

    #[test]
    fn composition_rule() {
        let f = DiskMappingClass::braid_generator(1, 3, 1).unwrap();
        let g = DiskMappingClass::braid_generator(2, 3, 1).unwrap();
        let fg = f.compose(&g).unwrap();
        let expect = &f.endo().apply(&w(&[3, 2])).unwrap() * &w(&[3, 1]);
        assert_eq!(fg.arc_prefix(3), &expect);
        assert!(fg.is_boundary_consistent());
        assert_eq!(DiskMappingClass::identity(3).compose(&g).unwrap(), g);
    }

    #[test]
    fn braid_word_order_reversal() {
        let a = parse_braid("A1,3", None).unwrap();
        assert_eq!(
            DiskMappingClass::from_braid_word(&a).unwrap(),
            DiskMappingClass::braid_generator(1, 3, 1).unwrap()
        );
        let v = parse_braid("[x2,x1]", Some(3)).unwrap();
        let f = DiskMappingClass::from_braid_word(&v).unwrap();
        let gen = |i, s| DiskMappingClass::braid_generator(i, 3, s).unwrap();
        let expect = gen(1, -1)
            .compose(&gen(2, -1))
            .unwrap()
            .compose(&gen(1, 1))
            .unwrap()
            .compose(&gen(2, 1))
            .unwrap();
        assert_eq!(f, expect);
        let empty = BraidWord {
            strands: 3,
            letters: vec![],
        };
        assert!(DiskMappingClass::from_braid_word(&empty).unwrap().is_identity());
    }

    #[test]
    fn levels() {
        let id = johnson_level(&DiskMappingClass::identity(3), 4).unwrap();
        assert_eq!(id.full_level, LcsWeight::Identity);
        let f = DiskMappingClass::braid_generator(1, 3, 1).unwrap();
        let l = johnson_level(&f, 4).unwrap();
        assert_eq!(l.loop_level, LcsWeight::Exact(2));
        assert_eq!(l.full_level, LcsWeight::Exact(1));
        let v = parse_braid("[x2,x1]", Some(3)).unwrap();
        let g = DiskMappingClass::from_braid_word(&v).unwrap();
        assert_eq!(johnson_level(&g, 4).unwrap().full_level, LcsWeight::Exact(2));
    }

    #[test]
    fn embeddings() {
        let b = Embedding::block(3).unwrap();
        assert_eq!(b.y_images[0], FreeWord::commutator(&w(&[1]), &w(&[2])));
        let cf = Embedding::church_farb(1).unwrap();
        assert_eq!(cf.y_images[2], parse_word("[c4, c5 c6 c3]").unwrap());
        for e in [b, cf, Embedding::builtin("church-farb:n=3").unwrap()] {
            for yi in &e.y_images {
                assert!(crate::groupring::abelianize(yi, e.rank()).unwrap().is_one());
            }
        }
        assert!(Embedding::builtin("torus:g=1").is_err());
    }

    #[test]
    fn extension() {
        let cf = Embedding::church_farb(2).unwrap();
        let id = cf.extend(&DiskMappingClass::identity(3)).unwrap();
        assert!(id.endo.is_identity());
        let v = parse_braid("[x2,x1]", Some(3)).unwrap();
        let f = DiskMappingClass::from_braid_word(&v).unwrap();
        let ext = cf.extend(&f).unwrap();
        let u1 = cf.push_forward(f.arc_prefix(1)).unwrap();
        assert_eq!(ext.endo.image(2), &w(&[2]).conjugate_by(&u1));
        assert_eq!(ext.endo.image(1), &w(&[1]));
    }
}
