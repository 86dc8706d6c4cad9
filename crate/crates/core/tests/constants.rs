//! Derived constants compared with values computed independently at 60
//! significant digits.

use domtie::cascade::{relax_threshold, sparsify_b};
use domtie::dichotomy::DichotomyParams;
use domtie::Rational;
use num_bigint::BigInt;

/// `(c, d, m, ⌈m⁴·c·ln(e·c)⌉)`.
const THEOREM: [(usize, usize, usize, &str); 20] = [
    (12, 9, 249, "160756959525"),
    (3, 11, 83, "298789847"),
    (3, 8, 62, "93029401"),
    (10, 9, 209, "63014306457"),
    (6, 11, 155, "9668431863"),
    (6, 6, 90, "1099004033"),
    (9, 6, 132, "8735974890"),
    (3, 9, 69, "142708497"),
    (7, 5, 89, "1293831032"),
    (8, 7, 135, "8182707462"),
    (5, 4, 54, "110940984"),
    (1, 12, 38, "2085136"),
    (8, 12, 220, "57710212624"),
    (9, 11, 227, "76404525156"),
    (10, 11, 251, "131083763632"),
    (7, 6, 104, "2412408744"),
    (5, 7, 87, "747470372"),
    (10, 4, 104, "3863557442"),
    (2, 12, 64, "56812592"),
    (6, 4, 64, "281027710"),
];

#[test]
fn theorem_parameters() {
    for (c, d, m, s) in THEOREM {
        let p = DichotomyParams::theorem(c, d).unwrap();
        let s: BigInt = s.parse().unwrap();
        assert_eq!(p.m(), m, "m for c = {c}, d = {d}");
        assert_eq!(p.s(), &s, "s for c = {c}, d = {d}");
        assert_eq!(relax_threshold(m, &Rational::from_usize(c)), s);
        let denom = BigInt::from(48) * BigInt::from(m) * BigInt::from(m) * &s * &s;
        assert_eq!(p.threshold_denominator(), denom);
        assert_eq!(p.ratio_bound(), BigInt::from(4 * d + 2) * denom);
    }
}

#[test]
fn sparsification_b() {
    for (m, c, b) in [
        (2, "1", 4),
        (2, "2", 6),
        (3, "1", 20),
        (3, "3/2", 28),
        (4, "5/4", 91),
        (5, "7", 592),
    ] {
        let c: Rational = c.parse().unwrap();
        assert_eq!(sparsify_b(m, &c), BigInt::from(b), "m = {m}, c = {c}");
    }
}
