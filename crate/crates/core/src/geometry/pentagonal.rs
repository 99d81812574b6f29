//! Exact sign computations for points at multiples of 36 degrees.
//!
//! `cos(36k°)` lies in Q(√5) and `sin(36k°)` is `±sqrt(w)` with
//! `w = (5 ∓ √5)/8`, so every predicate reduces to signs in a two-step tower
//! of quadratic extensions over the rationals.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::rational::{rat, Rational};

/// `a + b·√5`
#[derive(Clone, Debug, PartialEq)]
pub struct Q5 {
    pub a: Rational,
    pub b: Rational,
}

fn sign_of(r: &Rational) -> Ordering {
    r.cmp(&Rational::zero())
}

/// Sign of `x + y·sqrt(z)` for `z >= 0`, given the signs of `x`, `y` and a
/// way to compare `x²` against `y²·z`.
fn combine(sx: Ordering, sy: Ordering, x2_minus_y2z: impl FnOnce() -> Ordering) -> Ordering {
    use Ordering::*;
    match (sx, sy) {
        (_, Equal) => sx,
        (Equal, _) => sy,
        (Greater, Greater) => Greater,
        (Less, Less) => Less,
        (Greater, Less) => x2_minus_y2z(),
        (Less, Greater) => x2_minus_y2z().reverse(),
    }
}

impl Q5 {
    pub fn rational(a: Rational) -> Q5 {
        Q5 { a, b: Rational::zero() }
    }

    pub fn new(a: Rational, b: Rational) -> Q5 {
        Q5 { a, b }
    }

    pub fn zero() -> Q5 {
        Q5::rational(Rational::zero())
    }

    pub fn sign(&self) -> Ordering {
        combine(sign_of(&self.a), sign_of(&self.b), || (&self.a * &self.a).cmp(&(&self.b * &self.b * rat(5, 1))))
    }

    pub fn add(&self, o: &Q5) -> Q5 {
        Q5::new(&self.a + &o.a, &self.b + &o.b)
    }

    pub fn sub(&self, o: &Q5) -> Q5 {
        Q5::new(&self.a - &o.a, &self.b - &o.b)
    }

    pub fn mul(&self, o: &Q5) -> Q5 {
        Q5::new(&self.a * &o.a + &self.b * &o.b * rat(5, 1), &self.a * &o.b + &self.b * &o.a)
    }

    pub fn scale(&self, r: &Rational) -> Q5 {
        Q5::new(&self.a * r, &self.b * r)
    }
}

/// `re + im·sqrt(w)` with `w` a positive element of Q(√5).
#[derive(Clone, Debug)]
pub struct Ext {
    pub re: Q5,
    pub im: Q5,
    pub w: Q5,
}

impl Ext {
    pub fn q5(re: Q5, w: &Q5) -> Ext {
        Ext { re, im: Q5::zero(), w: w.clone() }
    }

    pub fn sign(&self) -> Ordering {
        combine(self.re.sign(), self.im.sign(), || {
            self.re.mul(&self.re).sub(&self.im.mul(&self.im).mul(&self.w)).sign()
        })
    }

    pub fn add(&self, o: &Ext) -> Ext {
        Ext { re: self.re.add(&o.re), im: self.im.add(&o.im), w: self.w.clone() }
    }

    pub fn sub(&self, o: &Ext) -> Ext {
        Ext { re: self.re.sub(&o.re), im: self.im.sub(&o.im), w: self.w.clone() }
    }

    pub fn mul(&self, o: &Ext) -> Ext {
        Ext {
            re: self.re.mul(&o.re).add(&self.im.mul(&o.im).mul(&self.w)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
            w: self.w.clone(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Ext {
        Ext { re: self.re.scale(r), im: self.im.scale(r), w: self.w.clone() }
    }

    pub fn add_rational(&self, r: &Rational) -> Ext {
        Ext { re: self.re.add(&Q5::rational(r.clone())), im: self.im.clone(), w: self.w.clone() }
    }
}

/// Sign of `a·sqrt(q) + b` for rational `q >= 0`.
pub fn sign_with_root(a: &Ext, q: &Rational, b: &Ext) -> Ordering {
    combine(a.sign(), b.sign(), || a.mul(a).scale(q).sub(&b.mul(b)).sign())
}

/// `(cos θ, sin θ)` for `θ = 36°·k`, `k` in `0..10`, as elements over the
/// extension that contains them.
pub fn unit_direction(k: usize) -> (Ext, Ext) {
    let h = |p, q| rat(p, q);
    let cos36 = Q5::new(h(1, 4), h(1, 4));
    let cos72 = Q5::new(h(-1, 4), h(1, 4));
    let neg = |x: &Q5| x.scale(&h(-1, 1));
    let one = Q5::rational(h(1, 1));
    // sin36 = sqrt((5 - √5)/8), sin72 = sqrt((5 + √5)/8)
    let w36 = Q5::new(h(5, 8), h(-1, 8));
    let w72 = Q5::new(h(5, 8), h(1, 8));
    let (c, s_sign, w) = match k % 10 {
        0 => (one.clone(), 0, w36),
        1 => (cos36.clone(), 1, w36),
        2 => (cos72.clone(), 1, w72),
        3 => (neg(&cos72), 1, w72),
        4 => (neg(&cos36), 1, w36),
        5 => (neg(&one), 0, w36),
        6 => (neg(&cos36), -1, w36),
        7 => (neg(&cos72), -1, w72),
        8 => (cos72.clone(), -1, w72),
        _ => (cos36.clone(), -1, w36),
    };
    let cos = Ext::q5(c, &w);
    let sin = Ext { re: Q5::zero(), im: Q5::rational(h(s_sign, 1)), w };
    (cos, sin)
}
