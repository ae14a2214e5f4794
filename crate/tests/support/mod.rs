//! Oracles and corpora shared by the acceptance criteria. Nothing here calls
//! the engine's Gröbner or resolution code: linear algebra over `F_p` is done
//! by hand on Macaulay matrices.

#![allow(dead_code)]

use std::collections::BTreeMap;

use cmreg::{
    Coeff, CoefficientField, ExtInt, GradedModule, Ideal, Monomial, PolyRing, Polynomial,
    QuotientRing,
};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Rng8 = ChaCha8Rng;

pub fn ring(field: CoefficientField, n: usize) -> QuotientRing {
    QuotientRing::polynomial(PolyRing::new(field, n))
}

pub fn qq(n: usize) -> QuotientRing {
    ring(CoefficientField::Rationals, n)
}

pub fn gf(p: u32, n: usize) -> QuotientRing {
    ring(CoefficientField::Prime(p), n)
}

pub fn quotient(field: CoefficientField, n: usize, rels: &[&str]) -> QuotientRing {
    let r = PolyRing::new(field, n);
    QuotientRing::new(r, rels.iter().map(|s| r.parse(s).unwrap()).collect()).unwrap()
}

pub fn polys<S: AsRef<str>>(ring: &QuotientRing, gens: &[S]) -> Vec<Polynomial> {
    gens.iter().map(|s| ring.parse(s.as_ref()).unwrap()).collect()
}

pub fn ideal<S: AsRef<str>>(ring: &QuotientRing, gens: &[S]) -> Ideal {
    Ideal::new(ring, polys(ring, gens)).unwrap()
}

pub fn cyc<S: AsRef<str>>(ring: &QuotientRing, gens: &[S]) -> GradedModule {
    GradedModule::cyclic(ring, &polys(ring, gens)).unwrap()
}

/// `reg` from a minimal free resolution over the ambient polynomial ring.
pub fn ambient_betti_reg(m: &GradedModule) -> ExtInt {
    let m = m.restrict_to_ambient();
    if m.is_zero() {
        return ExtInt::NegInf;
    }
    let res = m.resolution(m.ring().nvars() + 2);
    assert!(!res.truncated, "resolution over a polynomial ring must be finite");
    res.betti().reg()
}

/// Length of the minimal free resolution, when it stops by `cap`.
pub fn pd(m: &GradedModule, cap: usize) -> Option<usize> {
    let r = m.resolution(cap);
    if r.truncated {
        None
    } else {
        Some(r.length())
    }
}

pub fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of monomials of degree `d` in `n` variables.
pub fn monomials_in_degree(n: usize, d: i64) -> i64 {
    if d < 0 {
        0
    } else {
        binom(d as u64 + n as u64 - 1, n as u64 - 1) as i64
    }
}

// ----- random monomials, binomials and ideals -----

pub fn rand_monomial(rng: &mut Rng8, n: usize, d: u32) -> Vec<u32> {
    let mut e = vec![0u32; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    e
}

pub fn mono_text(e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| if k == 1 { format!("x{i}") } else { format!("x{i}^{k}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// A monomial, or with probability one half a binomial `m1 - c*m2`.
pub fn rand_generator(rng: &mut Rng8, n: usize, max_deg: u32, binomials: bool) -> String {
    let d = rng.gen_range(1..=max_deg);
    let a = rand_monomial(rng, n, d);
    if !binomials || !rng.gen_bool(0.5) {
        return mono_text(&a);
    }
    let b = loop {
        let b = rand_monomial(rng, n, d);
        if b != a {
            break b;
        }
    };
    let c = rng.gen_range(1..=3);
    if c == 1 {
        format!("{} - {}", mono_text(&a), mono_text(&b))
    } else {
        format!("{} - {}*{}", mono_text(&a), c, mono_text(&b))
    }
}

pub fn rand_gens(rng: &mut Rng8, n: usize, count: usize, max_deg: u32, binomials: bool) -> Vec<String> {
    (0..count).map(|_| rand_generator(rng, n, max_deg, binomials)).collect()
}

// ----- polynomials over F_p by hand -----

pub type PolyP = BTreeMap<Monomial, u64>;

fn coeff_mod(c: &Coeff, p: u64) -> u64 {
    match c {
        Coeff::Mod(v) => *v as u64 % p,
        Coeff::Rat(_) => panic!("the F_p oracle only handles prime fields"),
    }
}

pub fn to_p(f: &Polynomial, p: u64) -> PolyP {
    let mut out = PolyP::new();
    for (m, c) in f.terms() {
        let v = coeff_mod(c, p);
        if v != 0 {
            out.insert(m.clone(), v);
        }
    }
    out
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r, mut b, mut e) = (1u64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn lead(f: &PolyP) -> Option<(&Monomial, &u64)> {
    f.iter().next_back()
}

/// `f - c * m * g`.
fn sub_multiple(f: &mut PolyP, c: u64, m: &Monomial, g: &PolyP, p: u64) {
    for (gm, gc) in g {
        let key = m.mul(gm);
        let delta = c * gc % p;
        let e = f.entry(key.clone()).or_insert(0);
        *e = (*e + p - delta) % p;
        if *e == 0 {
            f.remove(&key);
        }
    }
}

/// Remainder of `f` on division by `basis`, reducing every term.
pub fn remainder(mut f: PolyP, basis: &[PolyP], p: u64) -> PolyP {
    let mut rem = PolyP::new();
    while let Some((m, c)) = lead(&f).map(|(m, c)| (m.clone(), *c)) {
        let hit = basis.iter().find(|g| lead(g).is_some_and(|(gm, _)| gm.divides(&m)));
        match hit {
            Some(g) => {
                let (gm, gc) = lead(g).unwrap();
                let q = gm.quotient_of(&m);
                sub_multiple(&mut f, c * inv_mod(*gc, p) % p, &q, g, p);
            }
            None => {
                f.remove(&m);
                rem.insert(m, c);
            }
        }
    }
    rem
}

pub fn s_poly(f: &PolyP, g: &PolyP, p: u64) -> PolyP {
    let (fm, fc) = lead(f).unwrap();
    let (gm, gc) = lead(g).unwrap();
    let l = fm.lcm(gm);
    let mut out = PolyP::new();
    let one = Monomial::one(l.nvars());
    let mut a = PolyP::new();
    sub_multiple(&mut a, inv_mod(*fc, p), &fm.quotient_of(&l), f, p);
    sub_multiple(&mut out, inv_mod(*gc, p), &gm.quotient_of(&l), g, p);
    // out = -g', a = -f'; return f' - g' = out - a.
    sub_multiple(&mut out, 1, &one, &a, p);
    out
}

// ----- Macaulay matrices -----

/// Row echelon form of the degree-`d` part of the ideal generated by `gens`
/// in `F_p[x0, …, x{n−1}]`. Returns the pivot monomials, i.e. the leading
/// monomials of the degree-`d` part.
pub struct MacaulayDegree {
    pub pivots: BTreeMap<Monomial, Vec<u64>>,
    pub columns: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
    p: u64,
}

impl MacaulayDegree {
    pub fn new(gens: &[PolyP], n: usize, d: u32, p: u64) -> Self {
        let columns = Monomial::all_of_degree(n, d);
        let index = columns.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut me = MacaulayDegree { pivots: BTreeMap::new(), columns, index, p };
        for g in gens {
            let Some((gm, _)) = lead(g) else { continue };
            let gd = gm.degree();
            if gd > d {
                continue;
            }
            for m in Monomial::all_of_degree(n, d - gd) {
                let mut row = vec![0u64; me.columns.len()];
                for (t, c) in g {
                    row[me.index[&m.mul(t)]] = *c;
                }
                me.insert(row);
            }
        }
        me
    }

    fn row_of(&self, f: &PolyP) -> Vec<u64> {
        let mut row = vec![0u64; self.columns.len()];
        for (t, c) in f {
            row[self.index[t]] = *c;
        }
        row
    }

    /// Reduce `row` against the pivots; columns are ordered largest monomial
    /// first, so the first nonzero entry is the leading term.
    fn reduce(&self, mut row: Vec<u64>) -> Vec<u64> {
        let p = self.p;
        for k in 0..row.len() {
            if row[k] == 0 {
                continue;
            }
            if let Some(piv) = self.pivots.get(&self.columns[k]) {
                let c = row[k];
                for (x, y) in row.iter_mut().zip(piv) {
                    *x = (*x + p - c * y % p) % p;
                }
            }
        }
        row
    }

    fn insert(&mut self, row: Vec<u64>) {
        let row = self.reduce(row);
        if let Some(k) = row.iter().position(|&x| x != 0) {
            let inv = inv_mod(row[k], self.p);
            let row: Vec<u64> = row.iter().map(|x| x * inv % self.p).collect();
            self.pivots.insert(self.columns[k].clone(), row);
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn contains(&self, f: &PolyP) -> bool {
        self.reduce(self.row_of(f)).iter().all(|&x| x == 0)
    }
}

/// `dim_k (S/I)_d` for `d = 0 ..= top`, by Macaulay matrix ranks.
pub fn hf_quotient(gens: &[PolyP], n: usize, top: u32, p: u64) -> Vec<i64> {
    (0..=top)
        .map(|d| monomials_in_degree(n, d as i64) - MacaulayDegree::new(gens, n, d, p).rank() as i64)
        .collect()
}
