//! Seeded rejection sampling of `G(n, p)` graphs inside a class.
//!
//! Sample `i` draws from ChaCha8 seeded with the run seed on stream `i`, so
//! each sample is reproducible on its own and independent of thread count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::detect::{is_member, ClassSpec};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default number of draws per sample before giving up.
pub const DEFAULT_REJECTION_BUDGET: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SamplerSpec {
    pub n_min: usize,
    pub n_max: usize,
    pub edge_prob: f64,
    pub count: usize,
    #[serde(default = "default_budget")]
    pub rejection_budget: usize,
}

fn default_budget() -> usize {
    DEFAULT_REJECTION_BUDGET
}

impl SamplerSpec {
    /// Vertex count of sample `i`: cycles through `n_min..=n_max`.
    pub fn n_for(&self, i: usize) -> usize {
        self.n_min + i % (self.n_max - self.n_min + 1)
    }

    fn validate(&self) -> Result<()> {
        if self.count == 0 {
            return Err(Error::Config("sample count must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.edge_prob) {
            return Err(Error::Config(format!("edge probability {} outside [0, 1]", self.edge_prob)));
        }
        if self.n_min > self.n_max {
            return Err(Error::Config(format!("n_min {} > n_max {}", self.n_min, self.n_max)));
        }
        if self.rejection_budget == 0 {
            return Err(Error::Config("rejection budget must be positive".into()));
        }
        Ok(())
    }
}

fn draw(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("sampled edges are in range")
}

/// Sample number `index`: the first draw on its stream that lies in `class`.
pub fn sample_one(class: &ClassSpec, s: &SamplerSpec, seed: u64, index: usize) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let n = s.n_for(index);
    for _ in 0..s.rejection_budget {
        let g = draw(&mut rng, n, s.edge_prob);
        if is_member(&g, class).member {
            return Ok(g);
        }
    }
    Err(Error::RejectionBudgetExhausted {
        index,
        budget: s.rejection_budget,
    })
}

/// `count` members of `class`, in sample order.
pub fn sample_in_class(class: &ClassSpec, s: &SamplerSpec, seed: u64) -> Result<Vec<Graph>> {
    s.validate()?;
    (0..s.count).map(|i| sample_one(class, s, seed, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{self, PatternId, PatternInstance};

    fn spec(n: usize, p: f64, count: usize, budget: usize) -> SamplerSpec {
        SamplerSpec {
            n_min: n,
            n_max: n,
            edge_prob: p,
            count,
            rejection_budget: budget,
        }
    }

    #[test]
    fn diamond_free_samples() {
        let class = ClassSpec::new(
            "diamond-free",
            vec![PatternInstance::fixed(PatternId::Diamond, patterns::diamond())],
        );
        let gs = sample_in_class(&class, &spec(8, 0.3, 10, 10_000), 1).unwrap();
        assert_eq!(gs.len(), 10);
        for g in &gs {
            assert_eq!(g.n(), 8);
            assert!(crate::detect::find_induced(g, &patterns::diamond()).is_none());
        }
        assert_eq!(gs, sample_in_class(&class, &spec(8, 0.3, 10, 10_000), 1).unwrap());
    }

    #[test]
    fn empty_class_exhausts_budget() {
        let k1 = PatternInstance::fixed(PatternId::Complete, patterns::complete(1).unwrap());
        let class = ClassSpec::new("none", vec![k1]);
        assert!(matches!(
            sample_in_class(&class, &spec(3, 0.5, 1, 50), 7),
            Err(Error::RejectionBudgetExhausted { index: 0, budget: 50 })
        ));
    }

    #[test]
    fn unrestricted_class_accepts_first_draw() {
        let class = ClassSpec::new("all", vec![]);
        let s = spec(6, 0.5, 3, 1);
        let gs = sample_in_class(&class, &s, 99).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        rng.set_stream(2);
        assert_eq!(gs[2], draw(&mut rng, 6, 0.5));
    }

    #[test]
    fn bad_specs() {
        let class = ClassSpec::new("all", vec![]);
        assert!(sample_in_class(&class, &spec(3, 1.5, 1, 1), 0).is_err());
        assert!(sample_in_class(&class, &spec(3, 0.5, 0, 1), 0).is_err());
    }
}
