//! Finite modules over finite rings and their submodule lattices.

use std::fmt;
use std::sync::Arc;

use crate::elemset::{AdditiveGroup, ElemSet, Span};
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::ideal::Ideal;
use crate::lattice::{adjunction_closure, LatticeReport, NODE_CAP};
use crate::limits::Limits;
use crate::ring::{quotient, FiniteRing};

/// The lattice of submodules of a module.
pub type SubmoduleLattice = LatticeReport;

struct ModTables {
    order: usize,
    zero: usize,
    add: Vec<u16>,
    act: Vec<u16>,
    neg: Vec<u16>,
    label: String,
}

/// An `R`-module given by its addition table and the action `R × M → M`.
#[derive(Clone)]
pub struct FiniteModule {
    ring: FiniteRing,
    t: Arc<ModTables>,
}

impl FiniteModule {
    pub(crate) fn build(
        ring: &FiniteRing,
        order: usize,
        zero: usize,
        label: impl Into<String>,
        add: impl Fn(usize, usize) -> usize,
        act: impl Fn(usize, usize) -> usize,
    ) -> FiniteModule {
        let mut at = vec![0u16; order * order];
        for a in 0..order {
            for b in a..order {
                let s = add(a, b) as u16;
                at[a * order + b] = s;
                at[b * order + a] = s;
            }
        }
        let mut ac = vec![0u16; ring.order() * order];
        for r in ring.elements() {
            for m in 0..order {
                ac[r * order + m] = act(r, m) as u16;
            }
        }
        FiniteModule::from_raw(ring, order, zero, label.into(), at, ac)
    }

    fn from_raw(
        ring: &FiniteRing,
        order: usize,
        zero: usize,
        label: String,
        add: Vec<u16>,
        act: Vec<u16>,
    ) -> FiniteModule {
        let neg = (0..order)
            .map(|a| {
                (0..order)
                    .position(|b| add[a * order + b] as usize == zero)
                    .unwrap_or(0) as u16
            })
            .collect();
        FiniteModule {
            ring: ring.clone(),
            t: Arc::new(ModTables {
                order,
                zero,
                add,
                act,
                neg,
                label,
            }),
        }
    }

    /// Validated construction from explicit tables; `action[r][m] = r·m`.
    pub fn from_tables(
        ring: &FiniteRing,
        add: Vec<Vec<usize>>,
        action: Vec<Vec<usize>>,
        zero: usize,
        label: impl Into<String>,
    ) -> Result<FiniteModule> {
        let n = add.len();
        if n == 0 || n > crate::limits::HARD_MAX_ORDER {
            return Err(Error::InvalidModule(format!("bad order {n}")));
        }
        if zero >= n
            || add.iter().any(|row| row.len() != n)
            || action.len() != ring.order()
            || action.iter().any(|row| row.len() != n)
            || add.iter().chain(&action).flatten().any(|&v| v >= n)
        {
            return Err(Error::InvalidModule("malformed tables".into()));
        }
        let flat = |t: &Vec<Vec<usize>>| t.iter().flatten().map(|&v| v as u16).collect();
        let m = FiniteModule::from_raw(ring, n, zero, label.into(), flat(&add), flat(&action));
        m.check_axioms()?;
        Ok(m)
    }

    /// `R` acting on itself.
    pub fn regular(ring: &FiniteRing) -> FiniteModule {
        FiniteModule::build(
            ring,
            ring.order(),
            ring.zero(),
            ring.label().to_string(),
            |a, b| ring.add(a, b),
            |r, m| ring.mul(r, m),
        )
    }

    pub fn zero_module(ring: &FiniteRing) -> FiniteModule {
        FiniteModule::build(ring, 1, 0, "0", |_, _| 0, |_, _| 0)
    }

    /// `R/I₁ ⊕ … ⊕ R/Iₖ` with componentwise action; a component with
    /// `Iⱼ = R` is zero and contributes nothing.
    pub fn cyclic_sum(ring: &FiniteRing, ideals: &[Ideal]) -> Result<FiniteModule> {
        Ok(FiniteModule::cyclic_sum_with_generators(ring, ideals)?.0)
    }

    /// As [`FiniteModule::cyclic_sum`], also returning the image of `1` in
    /// each summand (`None` for a zero summand).
    pub fn cyclic_sum_with_generators(
        ring: &FiniteRing,
        ideals: &[Ideal],
    ) -> Result<(FiniteModule, Vec<Option<usize>>)> {
        let comps = ideals
            .iter()
            .filter(|i| !i.is_whole())
            .map(|i| quotient(ring, i))
            .collect::<Result<Vec<_>>>()?;
        if comps.is_empty() {
            return Ok((FiniteModule::zero_module(ring), vec![None; ideals.len()]));
        }
        let size = comps
            .iter()
            .try_fold(1u128, |acc, q| acc.checked_mul(q.ring.order() as u128))
            .unwrap_or(u128::MAX);
        let order = Limits::check_order("module", size)?;
        let sizes: Vec<usize> = comps.iter().map(|q| q.ring.order()).collect();
        let mut weights = vec![1; sizes.len()];
        for i in (0..sizes.len() - 1).rev() {
            weights[i] = weights[i + 1] * sizes[i + 1];
        }
        let decode = |x: usize| -> Vec<usize> {
            sizes
                .iter()
                .zip(&weights)
                .map(|(&s, &w)| (x / w) % s)
                .collect()
        };
        let encode = |c: &[usize]| -> usize { c.iter().zip(&weights).map(|(&a, &w)| a * w).sum() };
        let decoded: Vec<Vec<usize>> = (0..order).map(decode).collect();
        let label = ideals
            .iter()
            .map(|i| {
                if i.is_zero() {
                    "R".to_string()
                } else if i.is_whole() {
                    "0".to_string()
                } else {
                    format!("R/{:?}", i.elements())
                }
            })
            .collect::<Vec<_>>()
            .join(" + ");
        let zeros: Vec<usize> = comps.iter().map(|q| q.ring.zero()).collect();
        let zero = encode(&zeros);
        let mut k = 0;
        let generators = ideals
            .iter()
            .map(|i| {
                if i.is_whole() {
                    return None;
                }
                let mut c = zeros.clone();
                c[k] = comps[k].ring.one();
                k += 1;
                Some(encode(&c))
            })
            .collect();
        let module = FiniteModule::build(
            ring,
            order,
            zero,
            label,
            |a, b| {
                let c: Vec<usize> = comps
                    .iter()
                    .enumerate()
                    .map(|(k, q)| q.ring.add(decoded[a][k], decoded[b][k]))
                    .collect();
                encode(&c)
            },
            |r, m| {
                let c: Vec<usize> = comps
                    .iter()
                    .enumerate()
                    .map(|(k, q)| q.ring.mul(q.projection.apply(r), decoded[m][k]))
                    .collect();
                encode(&c)
            },
        );
        Ok((module, generators))
    }

    /// `S` as an `R`-module through the embedding.
    pub fn from_extension(ext: &Extension) -> FiniteModule {
        let s = ext.top();
        FiniteModule::build(
            ext.base(),
            s.order(),
            s.zero(),
            format!("{} over {}", s.label(), ext.base().label()),
            |a, b| s.add(a, b),
            |r, m| s.mul(ext.embed().apply(r), m),
        )
    }

    pub fn check_axioms(&self) -> Result<()> {
        let (n, r) = (self.order(), &self.ring);
        let fail = |m: String| Err(Error::InvalidModule(m));
        for a in 0..n {
            if self.add(a, self.zero()) != a || self.add(a, self.neg(a)) != self.zero() {
                return fail(format!("{a}: identity or inverse fails"));
            }
            if self.act(r.one(), a) != a {
                return fail(format!("1·{a} != {a}"));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail(format!("addition not commutative at ({a},{b})"));
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail(format!("addition not associative at ({a},{b},{c})"));
                    }
                }
                for x in r.elements() {
                    if self.act(x, self.add(a, b)) != self.add(self.act(x, a), self.act(x, b)) {
                        return fail(format!("r(m+m') fails at ({x},{a},{b})"));
                    }
                }
            }
            for x in r.elements() {
                for y in r.elements() {
                    if self.act(r.add(x, y), a) != self.add(self.act(x, a), self.act(y, a)) {
                        return fail(format!("(r+r')m fails at ({x},{y},{a})"));
                    }
                    if self.act(r.mul(x, y), a) != self.act(x, self.act(y, a)) {
                        return fail(format!("(rr')m fails at ({x},{y},{a})"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.t.order
    }

    #[inline]
    pub fn zero(&self) -> usize {
        self.t.zero
    }

    pub fn label(&self) -> &str {
        &self.t.label
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.t.add[a * self.t.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.t.neg[a] as usize
    }

    /// `r·m`.
    #[inline]
    pub fn act(&self, r: usize, m: usize) -> usize {
        self.t.act[r * self.t.order + m] as usize
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn zero_set(&self) -> ElemSet {
        ElemSet::from_indices(self.order(), [self.zero()])
    }

    pub fn full_set(&self) -> ElemSet {
        ElemSet::full(self.order())
    }

    /// `N + Rx` for a submodule `N`.
    pub fn extend(&self, n: &ElemSet, x: usize) -> ElemSet {
        let mut span = Span::from_subgroup(n.clone());
        for r in self.ring.elements() {
            span.extend(self, self.act(r, x));
        }
        span.set
    }

    /// `Rx`.
    pub fn cyclic_submodule(&self, x: usize) -> ElemSet {
        ElemSet::from_indices(self.order(), self.ring.elements().map(|r| self.act(r, x)))
    }

    pub fn is_submodule(&self, set: &ElemSet) -> bool {
        set.contains(self.zero())
            && set.iter().all(|a| {
                set.iter().all(|b| set.contains(self.add(a, b)))
                    && self.ring.elements().all(|r| set.contains(self.act(r, a)))
            })
    }

    pub fn submodules(&self) -> Result<SubmoduleLattice> {
        Limits::check_lattice("submodule enumeration", self.order())?;
        let order: Vec<usize> = self.elements().collect();
        let nodes = adjunction_closure(self.zero_set(), &order, |n, x| self.extend(n, x), NODE_CAP)?;
        Ok(LatticeReport::from_nodes(nodes))
    }

    /// Number of submodules.
    pub fn nu(&self) -> Result<usize> {
        Ok(self.submodules()?.count())
    }

    /// `(0:M)`.
    pub fn annihilator(&self) -> Ideal {
        let set = ElemSet::from_indices(
            self.ring.order(),
            self.ring
                .elements()
                .filter(|&r| self.elements().all(|m| self.act(r, m) == self.zero())),
        );
        Ideal::from_set_unchecked(&self.ring, set)
    }

    /// `(0:x) = {r : rx = 0}`.
    pub fn annihilator_of(&self, x: usize) -> Ideal {
        let set = ElemSet::from_indices(
            self.ring.order(),
            self.ring
                .elements()
                .filter(|&r| self.act(r, x) == self.zero()),
        );
        Ideal::from_set_unchecked(&self.ring, set)
    }

    pub fn is_faithful(&self) -> bool {
        self.annihilator().is_zero()
    }

    /// Least generator, if `M = Rx` for some `x`.
    pub fn is_cyclic(&self) -> Option<usize> {
        self.elements()
            .find(|&x| self.cyclic_submodule(x).len() == self.order())
    }

    pub fn is_uniserial(&self) -> Result<bool> {
        Ok(self.submodules()?.is_chain())
    }

    /// The submodule `N` as a module, elements renumbered in index order.
    pub fn submodule(&self, n: &ElemSet) -> Result<(FiniteModule, Vec<usize>)> {
        if !self.is_submodule(n) {
            return Err(Error::InvalidModule("not a submodule".into()));
        }
        let members = n.to_vec();
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &m) in members.iter().enumerate() {
            pos[m] = i;
        }
        let sub = FiniteModule::build(
            &self.ring,
            members.len(),
            pos[self.zero()],
            format!("submodule of {}", self.label()),
            |a, b| pos[self.add(members[a], members[b])],
            |r, m| pos[self.act(r, members[m])],
        );
        Ok((sub, members))
    }

    /// `M/N` with its projection; cosets numbered by least member.
    pub fn quotient(&self, n: &ElemSet) -> Result<(FiniteModule, Vec<usize>)> {
        if !self.is_submodule(n) {
            return Err(Error::InvalidModule("not a submodule".into()));
        }
        let members = n.to_vec();
        let mut class = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for a in self.elements() {
            if class[a] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(a);
            for &m in &members {
                class[self.add(a, m)] = c;
            }
        }
        let q = FiniteModule::build(
            &self.ring,
            reps.len(),
            class[self.zero()],
            format!("{}/N", self.label()),
            |a, b| class[self.add(reps[a], reps[b])],
            |r, m| class[self.act(r, reps[m])],
        );
        Ok((q, class))
    }

    /// Composition length, by repeatedly dividing out a simple submodule
    /// (a nonzero cyclic submodule of least size).
    pub fn module_length(&self) -> usize {
        let mut m = self.clone();
        let mut len = 0;
        while m.order() > 1 {
            let simple = m
                .elements()
                .filter(|&x| x != m.zero())
                .map(|x| m.cyclic_submodule(x))
                .min_by_key(|s| s.len())
                .expect("nonzero module has a nonzero element");
            m = m.quotient(&simple).expect("cyclic submodule").0;
            len += 1;
        }
        len
    }
}

impl AdditiveGroup for FiniteModule {
    fn group_order(&self) -> usize {
        self.order()
    }
    fn group_zero(&self) -> usize {
        self.zero()
    }
    fn group_add(&self, a: usize, b: usize) -> usize {
        self.add(a, b)
    }
}

impl fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteModule({} over {}, order {})",
            self.label(),
            self.ring.label(),
            self.order()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::ideal_generated;
    use crate::ring::{make_gf, make_zmod};

    fn free(ring: &FiniteRing, n: usize) -> FiniteModule {
        FiniteModule::cyclic_sum(ring, &vec![Ideal::zero(ring); n]).unwrap()
    }

    #[test]
    fn vector_spaces_over_f2() {
        let f2 = make_gf(2, 1).unwrap();
        let v = free(&f2, 2);
        v.check_axioms().unwrap();
        let lat = v.submodules().unwrap();
        assert_eq!(lat.count(), 5);
        assert_eq!(lat.length(), 2);
        assert!(!v.is_uniserial().unwrap());
        assert!(v.is_cyclic().is_none());
        assert_eq!(free(&f2, 3).module_length(), 3);
        // oracle: subspaces of F3^3 are 1 + 13 + 13 + 1
        let f3 = make_gf(3, 1).unwrap();
        assert_eq!(free(&f3, 3).nu().unwrap(), 28);
    }

    #[test]
    fn cyclic_modules() {
        let z4 = make_zmod(4).unwrap();
        let m = FiniteModule::regular(&z4);
        assert_eq!(m.nu().unwrap(), 3);
        assert!(m.is_uniserial().unwrap());
        assert_eq!(m.is_cyclic(), Some(1));
        assert!(m.is_faithful());
        let half = FiniteModule::cyclic_sum(&z4, &[ideal_generated(&z4, &[2])]).unwrap();
        assert_eq!(half.order(), 2);
        assert_eq!(half.annihilator().elements(), vec![0, 2]);
        assert_eq!(half.nu().unwrap(), 2);
        assert_eq!(half.module_length(), 1);
        let zero = FiniteModule::cyclic_sum(&z4, &[Ideal::whole(&z4)]).unwrap();
        assert_eq!(zero.order(), 1);
        assert_eq!(zero.module_length(), 0);
    }

    #[test]
    fn quotients_and_submodules() {
        let z8 = make_zmod(8).unwrap();
        let m = FiniteModule::regular(&z8);
        let n = m.cyclic_submodule(4);
        let (q, proj) = m.quotient(&n).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(proj[4], q.zero());
        q.check_axioms().unwrap();
        let (s, members) = m.submodule(&m.cyclic_submodule(2)).unwrap();
        assert_eq!(members, vec![0, 2, 4, 6]);
        assert_eq!(s.nu().unwrap(), 3);
        assert_eq!(m.module_length(), 3);
    }

    #[test]
    fn table_validation() {
        let f2 = make_gf(2, 1).unwrap();
        let add = vec![vec![0, 1], vec![1, 0]];
        let bad_action = vec![vec![0, 1], vec![0, 1]];
        assert!(FiniteModule::from_tables(&f2, add.clone(), bad_action, 0, "bad").is_err());
        let action = vec![vec![0, 0], vec![0, 1]];
        let m = FiniteModule::from_tables(&f2, add, action, 0, "F2").unwrap();
        assert_eq!(m.nu().unwrap(), 2);
    }
}
