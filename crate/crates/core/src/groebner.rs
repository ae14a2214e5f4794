//! Buchberger's algorithm for graded submodules of free modules, with the
//! Gebauer–Möller pair update and degree-by-degree processing.

use std::collections::BTreeMap;

use crate::field::CoefficientField;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};
use crate::ring::QuotientRing;
use crate::vector::{merge_axpy, term_cmp, Term, Vector};

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    pos: u32,
    lcm: Monomial,
}

/// Incremental Gröbner basis of a submodule of `⊕ R(−twists[k])`.
#[derive(Clone, Debug)]
pub struct GbBuilder {
    field: CoefficientField,
    nvars: usize,
    twists: Vec<i64>,
    elems: Vec<Vector>,
    leads: Vec<(u32, Monomial)>,
    active: Vec<bool>,
    by_pos: BTreeMap<u32, Vec<usize>>,
    pairs: BTreeMap<i64, Vec<Pair>>,
    pending: BTreeMap<i64, Vec<Vector>>,
}

impl GbBuilder {
    pub fn new(ring: PolyRing, twists: Vec<i64>) -> Self {
        GbBuilder {
            field: ring.field,
            nvars: ring.nvars,
            twists,
            elems: Vec::new(),
            leads: Vec::new(),
            active: Vec::new(),
            by_pos: BTreeMap::new(),
            pairs: BTreeMap::new(),
            pending: BTreeMap::new(),
        }
    }

    /// A builder that already knows `J·e_k` for every position `k`.
    pub fn over(ring: &QuotientRing, twists: Vec<i64>) -> Self {
        let rank = twists.len();
        let mut b = GbBuilder::new(ring.ambient(), twists);
        let jgb = ring.gb();
        if !jgb.is_empty() {
            let mut seeds = Vec::with_capacity(rank * jgb.len());
            for k in 0..rank {
                for g in jgb {
                    seeds.push(Vector::from_poly_at(k, g));
                }
            }
            b.seed_basis(seeds);
        }
        b
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    fn rank_one(&self) -> bool {
        self.twists.len() == 1
    }

    fn pair_degree(&self, pos: u32, lcm: &Monomial) -> i64 {
        lcm.degree() as i64 + self.twists[pos as usize]
    }

    /// Queues a generator; it is reduced and added when its degree is processed.
    pub fn insert(&mut self, v: Vector) {
        if let Some(d) = v.degree(&self.twists) {
            self.pending.entry(d).or_default().push(v);
        }
    }

    /// Adds elements that already form a Gröbner basis among themselves,
    /// skipping the pairs between them.
    pub fn seed_basis(&mut self, vs: Vec<Vector>) {
        let start = self.elems.len();
        for v in vs {
            if v.is_zero() {
                continue;
            }
            let v = v.make_monic(self.field);
            let t = v.lead().unwrap();
            let (pos, mono) = (t.pos, t.mono.clone());
            let k = self.elems.len();
            // pairs with earlier, non-seeded elements still need treatment
            let earlier: Vec<usize> = self
                .by_pos
                .get(&pos)
                .map(|ix| ix.iter().copied().filter(|&g| g < start).collect())
                .unwrap_or_default();
            self.elems.push(v);
            self.leads.push((pos, mono.clone()));
            self.active.push(true);
            for g in earlier {
                let lcm = mono.lcm(&self.leads[g].1);
                let d = self.pair_degree(pos, &lcm);
                self.pairs.entry(d).or_default().push(Pair {
                    i: g,
                    j: k,
                    pos,
                    lcm,
                });
            }
            self.by_pos.entry(pos).or_default().push(k);
        }
    }

    fn find_reducer(&self, pos: u32, m: &Monomial, skip: Option<usize>) -> Option<usize> {
        self.by_pos.get(&pos).and_then(|ix| {
            ix.iter()
                .copied()
                .find(|&k| Some(k) != skip && self.leads[k].1.divides(m))
        })
    }

    fn reduce_skip(&self, v: &Vector, skip: Option<usize>, tail_only: bool) -> Vector {
        let field = self.field;
        let mut rest: Vec<Term> = v.terms().to_vec();
        let mut start = 0;
        let mut done: Vec<Term> = Vec::new();
        if tail_only && !rest.is_empty() {
            done.push(rest[0].clone());
            start = 1;
        }
        while start < rest.len() {
            let head = &rest[start];
            match self.find_reducer(head.pos, &head.mono, skip) {
                Some(k) => {
                    let q = self.leads[k].1.quotient_of(&head.mono);
                    let c = field.neg(&head.coeff);
                    rest = merge_axpy(field, &rest[start..], &c, &q, self.elems[k].terms());
                    start = 0;
                }
                None => {
                    done.push(rest[start].clone());
                    start += 1;
                }
            }
        }
        Vector::from_sorted_terms(done)
    }

    /// Full normal form with respect to the current active elements.
    pub fn reduce(&self, v: &Vector) -> Vector {
        self.reduce_skip(v, None, false)
    }

    fn spoly(&self, p: &Pair) -> Vector {
        let field = self.field;
        let qi = self.leads[p.i].1.quotient_of(&p.lcm);
        let qj = self.leads[p.j].1.quotient_of(&p.lcm);
        let one = field.one();
        let a = self.elems[p.i].mul_term(&qi, &one, field);
        a.axpy(&field.neg(&one), &qj, &self.elems[p.j], field)
    }

    fn add_element(&mut self, h: Vector) {
        let field = self.field;
        let h = h.make_monic(field);
        let t = h.lead().unwrap();
        let (pos, lh) = (t.pos, t.mono.clone());
        let k = self.elems.len();
        self.elems.push(h);
        self.leads.push((pos, lh.clone()));
        self.active.push(true);

        let cands: Vec<(usize, Monomial, bool)> = self
            .by_pos
            .get(&pos)
            .map(|ix| {
                ix.iter()
                    .map(|&g| {
                        let lg = &self.leads[g].1;
                        let disjoint = self.rank_one() && lh.is_coprime(lg);
                        (g, lh.lcm(lg), disjoint)
                    })
                    .collect()
            })
            .unwrap_or_default();

        // Gebauer–Möller: keep one representative per minimal lcm
        let mut kept: Vec<usize> = Vec::new();
        for a in 0..cands.len() {
            let (_, ref la, disjoint) = cands[a];
            if disjoint {
                kept.push(a);
                continue;
            }
            let later = cands[a + 1..].iter().any(|(_, lb, _)| lb.divides(la));
            let earlier = kept.iter().any(|&b| cands[b].1.divides(la));
            if !later && !earlier {
                kept.push(a);
            }
        }

        // old pairs made redundant by h
        for list in self.pairs.values_mut() {
            list.retain(|p| {
                if p.pos != pos || !lh.divides(&p.lcm) {
                    return true;
                }
                let li = self.leads[p.i].1.lcm(&lh);
                let lj = self.leads[p.j].1.lcm(&lh);
                li == p.lcm || lj == p.lcm
            });
        }
        self.pairs.retain(|_, v| !v.is_empty());

        for a in kept {
            let (g, ref lcm, disjoint) = cands[a];
            if disjoint {
                continue;
            }
            let d = lcm.degree() as i64 + self.twists[pos as usize];
            self.pairs.entry(d).or_default().push(Pair {
                i: g,
                j: k,
                pos,
                lcm: lcm.clone(),
            });
        }

        let ix = self.by_pos.entry(pos).or_default();
        ix.retain(|&g| {
            let dead = lh.divides(&self.leads[g].1);
            if dead {
                self.active[g] = false;
            }
            !dead
        });
        ix.push(k);
    }

    /// Processes all pairs and generators of degree at most `limit`
    /// (everything when `limit` is `None`).
    pub fn complete_to(&mut self, limit: Option<i64>) {
        loop {
            let dp = self.pairs.keys().next().copied();
            let dg = self.pending.keys().next().copied();
            let d = match (dp, dg) {
                (None, None) => break,
                (Some(a), None) | (None, Some(a)) => a,
                (Some(a), Some(b)) => a.min(b),
            };
            if let Some(l) = limit {
                if d > l {
                    break;
                }
            }
            if let Some(gens) = self.pending.remove(&d) {
                for g in gens {
                    let r = self.reduce(&g);
                    if !r.is_zero() {
                        self.add_element(r);
                    }
                }
            }
            while let Some(mut ps) = self.pairs.remove(&d) {
                ps.sort_by(|a, b| {
                    term_cmp(b.pos, &b.lcm, a.pos, &a.lcm)
                        .then(a.i.cmp(&b.i))
                        .then(a.j.cmp(&b.j))
                });
                for p in ps {
                    let s = self.spoly(&p);
                    let r = self.reduce(&s);
                    if !r.is_zero() {
                        self.add_element(r);
                    }
                }
            }
        }
    }

    pub fn complete(&mut self) {
        self.complete_to(None);
    }

    /// Membership test for a homogeneous vector; completes up to its degree.
    pub fn contains(&mut self, v: &Vector) -> bool {
        if v.is_zero() {
            return true;
        }
        let limit = if v.is_homogeneous(&self.twists) {
            v.degree(&self.twists)
        } else {
            None
        };
        self.complete_to(limit);
        self.reduce(v).is_zero()
    }

    fn active_indices(&self) -> Vec<usize> {
        let mut ix: Vec<usize> = (0..self.elems.len()).filter(|&k| self.active[k]).collect();
        ix.sort_by(|&a, &b| {
            let (pa, ma) = &self.leads[a];
            let (pb, mb) = &self.leads[b];
            term_cmp(*pb, mb, *pa, ma)
        });
        ix
    }

    /// Minimal leading terms `(position, monomial)` of the completed basis.
    pub fn leading_terms(&mut self) -> Vec<(u32, Monomial)> {
        self.complete();
        self.active_indices()
            .into_iter()
            .map(|k| self.leads[k].clone())
            .collect()
    }

    /// The reduced Gröbner basis: monic, interreduced, sorted by leading term
    /// from the largest to the smallest.
    pub fn reduced_basis(&mut self) -> Vec<Vector> {
        self.complete();
        let ix = self.active_indices();
        ix.iter()
            .map(|&k| {
                self.reduce_skip(&self.elems[k], Some(k), true)
                    .make_monic(self.field)
            })
            .collect()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }
}

/// S-vector of two basis elements sharing a leading position.
pub fn s_vector(field: CoefficientField, f: &Vector, g: &Vector) -> Option<Vector> {
    let (tf, tg) = (f.lead()?, g.lead()?);
    if tf.pos != tg.pos {
        return None;
    }
    let l = tf.mono.lcm(&tg.mono);
    let a = f.mul_term(&tf.mono.quotient_of(&l), &field.inv(&tf.coeff), field);
    let b = g.mul_term(&tg.mono.quotient_of(&l), &field.inv(&tg.coeff), field);
    Some(a.sub(&b, field))
}

/// Normal form of `v` with respect to `basis`, which must already be a Gröbner basis.
pub fn normal_form(ring: PolyRing, twists: &[i64], basis: &[Vector], v: &Vector) -> Vector {
    let mut b = GbBuilder::new(ring, twists.to_vec());
    b.seed_basis(basis.to_vec());
    b.reduce(v)
}

/// Reduced Gröbner basis of a homogeneous ideal of the polynomial ring.
pub fn ideal_gb(ring: PolyRing, gens: &[Polynomial]) -> Vec<Polynomial> {
    let mut b = GbBuilder::new(ring, vec![0]);
    for g in gens {
        b.insert(Vector::from_poly_at(0, g));
    }
    b.reduced_basis()
        .into_iter()
        .map(|v| v.component(ring, 0))
        .collect()
}

/// Normal form of a polynomial modulo a Gröbner basis of an ideal.
pub fn poly_normal_form(ring: PolyRing, basis: &[Polynomial], f: &Polynomial) -> Polynomial {
    if basis.is_empty() {
        return f.clone();
    }
    let vs: Vec<Vector> = basis.iter().map(|g| Vector::from_poly_at(0, g)).collect();
    normal_form(ring, &[0], &vs, &Vector::from_poly_at(0, f)).component(ring, 0)
}

/// Generators of `{u ∈ ⊕R(−source[j]) : Σ u_j·cols[j] ∈ ⟨rel⟩ + J·F}`, where `F`
/// is the free module with the given target twists. The result lives in the
/// source module and contains `J·source`.
pub fn kernel_modulo(
    ring: &QuotientRing,
    target: &[i64],
    source: &[i64],
    cols: &[Vector],
    rel: &[Vector],
) -> Vec<Vector> {
    let k = target.len() as u32;
    let m = source.len() as u32;
    let mut twists = target.to_vec();
    twists.extend_from_slice(source);
    let mut b = GbBuilder::over(ring, twists);
    let field = ring.field();
    let amb = ring.ambient();
    for (j, c) in cols.iter().enumerate() {
        let e = Vector::unit(amb, (k as usize) + j);
        b.insert(c.add(&e, field));
    }
    for r in rel {
        b.insert(r.clone());
    }
    b.complete();
    b.active_indices()
        .into_iter()
        .filter(|&ix| b.leads[ix].0 >= k)
        .map(|ix| b.elems[ix].restrict(k, k + m))
        .collect()
}

/// Indices of a minimal homogeneous generating set among `cands`, modulo the
/// submodule generated by `fixed` and `J·F`.
pub fn minimal_generators(
    ring: &QuotientRing,
    twists: &[i64],
    cands: &[Vector],
    fixed: &[Vector],
) -> Vec<usize> {
    let mut b = GbBuilder::over(ring, twists.to_vec());
    for f in fixed {
        b.insert(f.clone());
    }
    let mut order: Vec<usize> = (0..cands.len()).filter(|&i| !cands[i].is_zero()).collect();
    order.sort_by_key(|&i| cands[i].degree(twists).unwrap());
    let mut chosen = Vec::new();
    for i in order {
        let d = cands[i].degree(twists).unwrap();
        b.complete_to(Some(d));
        if !b.reduce(&cands[i]).is_zero() {
            chosen.push(i);
            b.insert(cands[i].clone());
        }
    }
    chosen.sort_unstable();
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CoefficientField;

    fn qq(n: usize) -> PolyRing {
        PolyRing::new(CoefficientField::Rationals, n)
    }

    fn polys(r: PolyRing, ss: &[&str]) -> Vec<Polynomial> {
        ss.iter().map(|s| r.parse(s).unwrap()).collect()
    }

    #[test]
    fn small_ideal_bases() {
        let r = qq(2);
        assert_eq!(
            ideal_gb(r, &polys(r, &["x0^2", "x0*x1"])),
            polys(r, &["x0^2", "x0*x1"])
        );
        assert_eq!(ideal_gb(r, &polys(r, &["x0"])), polys(r, &["x0"]));
        assert!(ideal_gb(r, &[]).is_empty());
        let g = ideal_gb(r, &polys(r, &["x0^2 + x1^2", "x0*x1"]));
        assert_eq!(g, polys(r, &["x1^3", "x0^2 + x1^2", "x0*x1"]));
    }

    #[test]
    fn normal_forms() {
        let r = qq(2);
        let g = ideal_gb(r, &polys(r, &["x0^2", "x0*x1"]));
        assert!(poly_normal_form(r, &g, &r.parse("x0^2").unwrap()).is_zero());
        let x = ideal_gb(r, &polys(r, &["x0"]));
        let y3 = r.parse("x1^3").unwrap();
        assert_eq!(poly_normal_form(r, &x, &y3), y3);
        let xy = ideal_gb(r, &polys(r, &["x0*x1"]));
        let f = r.parse("(x0 + x1)^2").unwrap();
        assert_eq!(
            poly_normal_form(r, &xy, &f),
            r.parse("x0^2 + x1^2").unwrap()
        );
    }

    #[test]
    fn buchberger_criterion_on_twisted_cubic() {
        let r = qq(4);
        let gens = polys(
            r,
            &["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"],
        );
        let g = ideal_gb(r, &gens);
        let vs: Vec<Vector> = g.iter().map(|p| Vector::from_poly_at(0, p)).collect();
        for a in &vs {
            for b in &vs {
                let s = s_vector(r.field, a, b).unwrap();
                assert!(normal_form(r, &[0], &vs, &s).is_zero());
            }
        }
    }

    #[test]
    fn syzygies_of_rows() {
        let r = qq(2);
        let ring = QuotientRing::polynomial(r);
        let cols = vec![
            Vector::from_poly_at(0, &r.parse("x0").unwrap()),
            Vector::from_poly_at(0, &r.parse("x1").unwrap()),
        ];
        let k = kernel_modulo(&ring, &[0], &[1, 1], &cols, &[]);
        assert_eq!(k.len(), 1);
        let v = k[0].make_monic(r.field);
        assert_eq!(v.to_polys(r, 2), polys(r, &["x1", "-x0"]));

        let cols = vec![
            Vector::from_poly_at(0, &r.parse("x0^2").unwrap()),
            Vector::from_poly_at(0, &r.parse("x0*x1").unwrap()),
        ];
        let k = kernel_modulo(&ring, &[0], &[2, 2], &cols, &[]);
        assert_eq!(k.len(), 1);
        assert_eq!(
            k[0].make_monic(r.field).to_polys(r, 2),
            polys(r, &["x1", "-x0"])
        );

        let cols = vec![Vector::from_poly_at(0, &r.parse("x0").unwrap())];
        assert!(kernel_modulo(&ring, &[0], &[1], &cols, &[]).is_empty());
    }

    #[test]
    fn minimal_generator_selection() {
        let r = qq(2);
        let ring = QuotientRing::polynomial(r);
        let cands: Vec<Vector> = polys(r, &["x0^2", "x0*x1", "x0^3", "x0^2*x1 + x0^3", "x1^3"])
            .iter()
            .map(|p| Vector::from_poly_at(0, p))
            .collect();
        assert_eq!(minimal_generators(&ring, &[0], &cands, &[]), vec![0, 1, 4]);
    }
}
