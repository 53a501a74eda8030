//! Algebra maps from a presented algebra into a tensor product of presented
//! algebras, given by generator images.

use crate::certificate::Certificate;
use crate::error::Result;
use crate::free::{FreeElement, Word};
use crate::presentation::Presentation;
use crate::tensor::{Factor, Space, Tensor};
use std::sync::Arc;

#[derive(Clone)]
pub struct AlgebraMorphism {
    pub name: String,
    pub source: Arc<Presentation>,
    /// Tensor factors of the target; empty means the ground field.
    pub targets: Vec<Arc<Presentation>>,
    pub images: Vec<Tensor>,
    /// Anti-multiplicative (a map into the opposite algebra).
    pub anti: bool,
}

impl std::fmt::Debug for AlgebraMorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AlgebraMorphism({})", self.name)
    }
}

impl AlgebraMorphism {
    pub fn new(
        name: impl Into<String>,
        source: Arc<Presentation>,
        targets: Vec<Arc<Presentation>>,
        images: Vec<Tensor>,
    ) -> Self {
        assert_eq!(images.len(), source.num_gens(), "one image per generator");
        AlgebraMorphism { name: name.into(), source, targets, images, anti: false }
    }

    /// Single-target map given by free-element images.
    pub fn single(name: impl Into<String>, source: Arc<Presentation>, target: Arc<Presentation>, images: Vec<FreeElement>) -> Self {
        let images = images.iter().map(Tensor::from_elem).collect();
        Self::new(name, source, vec![target], images)
    }

    /// Map to the ground field.
    pub fn to_field(name: impl Into<String>, source: Arc<Presentation>, values: Vec<crate::Scalar>) -> Self {
        let images = values.into_iter().map(|c| Tensor::scalar(c, 0)).collect();
        Self::new(name, source, vec![], images)
    }

    pub fn into_anti(mut self) -> Self {
        self.anti = true;
        self
    }

    pub fn arity(&self) -> usize {
        self.targets.len()
    }

    /// Same map with the image of one generator replaced.
    pub fn with_image(&self, gen: usize, image: Tensor) -> Self {
        let mut m = self.clone();
        m.images[gen] = image;
        m.name = format!("{} (modified)", self.name);
        m
    }

    pub fn space(&self, cap: u32) -> Result<Space> {
        Ok(Space(self.targets.iter().map(|p| Factor::algebra(p, cap)).collect::<Result<_>>()?))
    }

    /// Largest word length among the generator images.
    pub fn image_degree(&self) -> u32 {
        self.images.iter().map(|t| t.factor_degrees().into_iter().max().unwrap_or(0)).max().unwrap_or(0) as u32
    }

    /// Image of a word, normalized in `space` after every factor.
    pub fn apply_word(&self, w: &Word, space: &Space) -> Tensor {
        let mut acc = Tensor::unit(self.arity());
        let gens: Vec<_> = if self.anti { w.as_slice().iter().rev().copied().collect() } else { w.as_slice().to_vec() };
        for g in gens {
            acc = space.normalize(&acc.mul(&self.images[g as usize]));
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    pub fn apply(&self, e: &FreeElement, space: &Space) -> Tensor {
        let mut out = Tensor::zero();
        for (w, c) in e.terms() {
            out.add_scaled(&self.apply_word(w, space), c);
        }
        out
    }

    /// Apply to factor `pos` of a tensor and splice the result in place.
    pub fn apply_at(&self, t: &Tensor, pos: usize, space: &Space) -> Result<Tensor> {
        t.splice(pos, |w| Ok(self.apply_word(w, space)))
    }
}

/// Every relation of the source must map to zero in the target.
pub fn check_morphism(phi: &AlgebraMorphism) -> Result<Certificate> {
    let src = &phi.source;
    let rel_deg = src.relations().iter().filter_map(|r| r.degree()).max().unwrap_or(0) as u32;
    let level = (rel_deg * phi.image_degree()).max(1);
    let space = phi.space(level)?;
    let mut subject = vec![src.name().to_string()];
    subject.extend(phi.targets.iter().map(|t| t.name().to_string()));
    let exact = phi.targets.iter().all(|t| t.is_complete_at(level));
    let mut cert = Certificate::new(format!("algebra map {}", phi.name), subject, Some(level), exact);
    for (i, r) in src.relations().iter().enumerate() {
        let img = phi.apply(r, &space);
        let label = format!("relation {}: {} = 0", i, src.display(r));
        let residue = (!img.is_zero()).then(|| space.display(&img));
        cert.record(label, Some(level), residue);
    }
    Ok(cert)
}
