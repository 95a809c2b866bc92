//! Polynomials shipped with the crate, in the [`MvPoly`] text format.
//!
//! * `c_gamma`: the Case I curve in `(a3, m, gamma)`;
//! * `case2`: the Case II condition in `(m, gamma)`;
//! * `appendix_1` .. `appendix_7`: a basis for Case I at `gamma = 1`, in
//!   `(a0, a1, a2, a3, q)`.

use crate::error::{check_range, Result};
use crate::mvpoly::MvPoly;

pub const C_GAMMA: &str = include_str!("../data/c_gamma.txt");
pub const CASE2: &str = include_str!("../data/case2.txt");
pub const APPENDIX: [&str; 7] = [
    include_str!("../data/appendix_1.txt"),
    include_str!("../data/appendix_2.txt"),
    include_str!("../data/appendix_3.txt"),
    include_str!("../data/appendix_4.txt"),
    include_str!("../data/appendix_5.txt"),
    include_str!("../data/appendix_6.txt"),
    include_str!("../data/appendix_7.txt"),
];

/// `(file name, contents)` for every bundled file.
pub fn files() -> [(&'static str, &'static str); 9] {
    [
        ("c_gamma.txt", C_GAMMA),
        ("case2.txt", CASE2),
        ("appendix_1.txt", APPENDIX[0]),
        ("appendix_2.txt", APPENDIX[1]),
        ("appendix_3.txt", APPENDIX[2]),
        ("appendix_4.txt", APPENDIX[3]),
        ("appendix_5.txt", APPENDIX[4]),
        ("appendix_6.txt", APPENDIX[5]),
        ("appendix_7.txt", APPENDIX[6]),
    ]
}

pub fn c_gamma() -> MvPoly {
    MvPoly::parse(C_GAMMA).expect("bundled c_gamma parses")
}

pub fn case2() -> MvPoly {
    MvPoly::parse(CASE2).expect("bundled case2 parses")
}

/// Appendix element `index`, `1 <= index <= 7`.
pub fn appendix(index: usize) -> Result<MvPoly> {
    check_range("index", index as u64, 1, 7)?;
    Ok(MvPoly::parse(APPENDIX[index - 1]).expect("bundled appendix parses"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    #[test]
    fn bundled_files_parse() {
        assert_eq!(c_gamma().vars(), ["a3", "m", "gamma"]);
        assert_eq!(case2().vars(), ["m", "gamma"]);
        for i in 1..=7 {
            assert_eq!(appendix(i).unwrap().vars(), ["a0", "a1", "a2", "a3", "q"]);
        }
        assert!(appendix(0).is_err() && appendix(8).is_err());
    }

    #[test]
    fn term_counts() {
        let counts: alloc::vec::Vec<usize> = (1..=7).map(|i| appendix(i).unwrap().len()).collect();
        assert_eq!(counts, [6, 7, 42, 57, 63, 3, 21]);
        assert_eq!(c_gamma().len(), 29);
        assert_eq!(case2().len(), 31);
    }

    #[test]
    fn leading_terms() {
        let c = c_gamma();
        assert_eq!(c.coeff(&[16, 0, 0]), Rat::one());
        assert_eq!(c.coeff(&[14, 1, 0]), Rat::from_i64(32));
        assert_eq!(c.coeff(&[0, 2, 0]), Rat::from_i64(4096));
        assert_eq!(c.total_degree(), 16);
        let k = case2();
        assert_eq!(k.coeff(&[14, 0]), Rat::one());
        assert_eq!(k.coeff(&[13, 0]), Rat::frac(13, 3));
        assert_eq!(k.degree_in("m"), Some(14));
    }
}
