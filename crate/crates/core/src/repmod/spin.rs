use crate::field::Field;
use crate::matrix::Mat;
use crate::subspace::{EchelonBuilder, Subspace};

use super::module::LieModule;

/// Closure of `seeds` under `actions`.
pub fn spin_under<F: Field>(
    field: &F,
    dim: usize,
    actions: &[Mat<F>],
    seeds: &[Vec<F::Elem>],
) -> Subspace<F> {
    let mut b = EchelonBuilder::new(field, dim);
    let mut queue: Vec<Vec<F::Elem>> = seeds.iter().filter_map(|s| b.insert(s)).collect();
    while let Some(v) = queue.pop() {
        if b.dim() == dim {
            break;
        }
        for a in actions {
            if let Some(w) = b.insert(&a.apply(&v)) {
                queue.push(w);
            }
        }
    }
    b.to_subspace()
}

/// Actions used for spinning. In characteristic 0 the basis actions are
/// sparse with small entries, while random generators make the
/// coefficients of spun vectors grow.
fn spinning_actions<F: Field>(m: &LieModule<F>) -> &[Mat<F>] {
    if m.field().characteristic() == 0 {
        m.actions()
    } else {
        m.spin_actions()
    }
}

/// Smallest invariant subspace containing the seeds.
pub fn spin<F: Field>(m: &LieModule<F>, seeds: &[Vec<F::Elem>]) -> Subspace<F> {
    spin_under(m.field(), m.dim(), spinning_actions(m), seeds)
}

/// Spin under the transposed actions; the annihilator of the result is a
/// submodule of `m`.
pub fn spin_transposed<F: Field>(m: &LieModule<F>, seeds: &[Vec<F::Elem>]) -> Subspace<F> {
    let t: Vec<_> = spinning_actions(m).iter().map(|a| a.transpose()).collect();
    spin_under(m.field(), m.dim(), &t, seeds)
}

/// A spanning sequence produced by spinning one vector, with the recipe
/// that produced each member: `steps[k] = (parent, action)` means
/// `vectors[k] = actions[action] · vectors[parent]`.
#[derive(Clone, Debug)]
pub struct StandardBasis<F: Field> {
    pub vectors: Vec<Vec<F::Elem>>,
    pub steps: Vec<(usize, usize)>,
}

/// Spins `seed` under `actions` keeping the unreduced images, so the same
/// recipe can be replayed in another module.
pub fn standard_basis<F: Field>(
    field: &F,
    dim: usize,
    actions: &[Mat<F>],
    seed: &[F::Elem],
) -> StandardBasis<F> {
    let mut b = EchelonBuilder::new(field, dim);
    let mut out = StandardBasis {
        vectors: Vec::new(),
        steps: Vec::new(),
    };
    if b.insert(seed).is_none() {
        return out;
    }
    out.vectors.push(seed.to_vec());
    let mut k = 0;
    while k < out.vectors.len() && b.dim() < dim {
        for (g, a) in actions.iter().enumerate() {
            let w = a.apply(&out.vectors[k]);
            if b.insert(&w).is_some() {
                out.vectors.push(w);
                out.steps.push((k, g));
            }
        }
        k += 1;
    }
    out
}

/// Replays the recipe of a standard basis starting from `seed`.
pub fn replay<F: Field>(recipe: &StandardBasis<F>, actions: &[Mat<F>], seed: &[F::Elem]) -> Vec<Vec<F::Elem>> {
    let mut out = vec![seed.to_vec()];
    for &(parent, g) in &recipe.steps {
        let w = actions[g].apply(&out[parent]);
        out.push(w);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::liealg::MatLieAlg;
    use crate::repmod::module::natural_module;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn spin_examples() {
        let q = Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let v = natural_module(&MatLieAlg::sl(&q, 3), &mut rng).unwrap();
        assert!(spin(&v, &[vec![q.zero(); 3]]).is_zero());
        let full: Vec<_> = Mat::identity(&q, 3).row_vecs();
        assert!(spin(&v, &full).is_full());
        assert!(spin(&v, &[vec![q.one(), q.zero(), q.zero()]]).is_full());
    }

    #[test]
    fn spin_is_invariant_idempotent() {
        let f = PrimeField::new(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let acts: Vec<_> = (0..2).map(|_| {
            // block upper triangular keeps the first two coordinates
            let mut a = Mat::random(&f, 4, 4, &mut rng);
            for r in 2..4 {
                for c in 0..2 {
                    a[(r, c)] = 0;
                }
            }
            a
        }).collect();
        let m = LieModule::from_actions(&f, 4, acts).unwrap();
        let s = spin(&m, &[vec![1, 0, 0, 0]]);
        assert!(s.dim() <= 2);
        assert!(m.is_invariant(&s));
        assert_eq!(spin(&m, &s.basis_vecs()), s);
    }

    #[test]
    fn replay_reproduces_basis() {
        let f = PrimeField::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let acts: Vec<_> = (0..2).map(|_| Mat::random(&f, 5, 5, &mut rng)).collect();
        let sb = standard_basis(&f, 5, &acts, &[1, 2, 0, 0, 1]);
        let again = replay(&sb, &acts, &[1, 2, 0, 0, 1]);
        assert_eq!(again, sb.vectors);
    }
}
