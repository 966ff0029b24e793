//! Built-in fixtures.
//!
//! | name                   | quiver             | dims       | matrices                 |
//! |------------------------|--------------------|------------|--------------------------|
//! | `a21-ex1`              | 1→2, 2→3, 1→3      | (3,3,3)    | I₃, J₃(0), I₃            |
//! | `a21-ex3`              | 1→2, 2→3, 1→3      | (2,2,2)    | I₂, J₂(0), I₂            |
//! | `a21-reg:t`            | 1→2, 2→3, 1→3      | (⌊t/2⌋,⌈t/2⌉,⌊t/2⌋) | the I/J/I pattern truncated |
//! | `kronecker-reg:n`      | two arrows 1→2     | (n,n)      | Iₙ, Jₙ(0)                |
//! | `kronecker-preproj:n`  | two arrows 1→2     | (n,n+1)    | the two inclusions       |
//!
//! `a21-reg:t` is the regular module of quasi-length `t` on the ray of the quasi-simple
//! of dimension `(0,1,0)`; `a21-reg:6` is `a21-ex1` and `a21-reg:4` is `a21-ex3`.

use quivergr_core::{DimVector, Field, Matrix, Quiver, Rationals, Representation};
use std::sync::Arc;

use crate::format::{InputDocument, Metadata};
use crate::CliError;

pub const NAMES: &[&str] = &[
    "a21-ex1",
    "a21-ex3",
    "a21-reg:<t>",
    "kronecker-reg:<n>",
    "kronecker-preproj:<n>",
];

/// The largest size parameter accepted by the parametrised families.
pub const MAX_PARAMETER: usize = 64;

pub fn emit_builtin(name: &str) -> Result<InputDocument, CliError> {
    let rep = builtin_representation(name)?;
    let metadata = Metadata {
        name: Some(name.to_string()),
        notes: None,
    };
    Ok(InputDocument::from_representation(&rep, Some(metadata)))
}

pub fn builtin_representation(name: &str) -> Result<Representation<Rationals>, CliError> {
    let unknown = || {
        CliError::Usage(format!(
            "unknown builtin {name:?}; valid names: {}",
            NAMES.join(", ")
        ))
    };
    let (family, param) = match name.split_once(':') {
        Some((family, n)) => {
            let n: usize = n.parse().map_err(|_| unknown())?;
            if n > MAX_PARAMETER {
                return Err(CliError::Usage(format!(
                    "{name}: parameter exceeds {MAX_PARAMETER}"
                )));
            }
            (family, Some(n))
        }
        None => (name, None),
    };
    let rep = match (family, param) {
        ("a21-ex1", None) => a21_regular(6),
        ("a21-ex3", None) => a21_regular(4),
        ("a21-reg", Some(t)) if t >= 1 => a21_regular(t),
        ("kronecker-reg", Some(n)) if n >= 1 => kronecker_regular(n),
        ("kronecker-preproj", Some(n)) => kronecker_preprojective(n),
        _ => return Err(unknown()),
    };
    Ok(rep.expect("builtin fixtures are well formed"))
}

fn jordan_block(rows: usize, cols: usize) -> Matrix<num_rational::BigRational> {
    let k = Rationals;
    let mut m = Matrix::zeros(&k, rows, cols);
    for r in 0..rows {
        if r + 1 < cols {
            m.set(r, r + 1, k.one());
        }
    }
    m
}

fn inclusion(rows: usize, cols: usize, offset: usize) -> Matrix<num_rational::BigRational> {
    let k = Rationals;
    let mut m = Matrix::zeros(&k, rows, cols);
    for c in 0..cols {
        m.set(c + offset, c, k.one());
    }
    m
}

fn a21_regular(t: usize) -> quivergr_core::Result<Representation<Rationals>> {
    let (f, c) = (t / 2, t.div_ceil(2));
    let q = Quiver::from_edges(3, &[(1, 2), (2, 3), (1, 3)])?;
    let maps = vec![
        inclusion(c, f, 0),
        jordan_block(f, c),
        Matrix::identity(&Rationals, f),
    ];
    Representation::new(Arc::new(q), Rationals, DimVector(vec![f, c, f]), maps)
}

fn kronecker_regular(n: usize) -> quivergr_core::Result<Representation<Rationals>> {
    let q = Quiver::from_edges(2, &[(1, 2), (1, 2)])?;
    let maps = vec![Matrix::identity(&Rationals, n), jordan_block(n, n)];
    Representation::new(Arc::new(q), Rationals, DimVector(vec![n, n]), maps)
}

fn kronecker_preprojective(n: usize) -> quivergr_core::Result<Representation<Rationals>> {
    let q = Quiver::from_edges(2, &[(1, 2), (1, 2)])?;
    let maps = vec![inclusion(n + 1, n, 0), inclusion(n + 1, n, 1)];
    Representation::new(Arc::new(q), Rationals, DimVector(vec![n, n + 1]), maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use quivergr_core::is_rigid;

    fn rows(m: &Matrix<num_rational::BigRational>) -> Vec<Vec<i64>> {
        m.row_iter()
            .map(|r| {
                r.iter()
                    .map(|x| i64::try_from(x.to_integer()).unwrap())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn fixtures_match_their_displayed_matrices() {
        let m = builtin_representation("a21-ex1").unwrap();
        assert_eq!(m.dims(), &DimVector(vec![3, 3, 3]));
        let id3 = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(rows(&m.maps()[0]), id3);
        assert_eq!(
            rows(&m.maps()[1]),
            vec![vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]
        );
        assert_eq!(rows(&m.maps()[2]), id3);

        let m = builtin_representation("a21-ex3").unwrap();
        assert_eq!(m.dims(), &DimVector(vec![2, 2, 2]));
        assert_eq!(rows(&m.maps()[1]), vec![vec![0, 1], vec![0, 0]]);

        let m = builtin_representation("kronecker-reg:2").unwrap();
        assert_eq!(m.dims(), &DimVector(vec![2, 2]));
        assert_eq!(rows(&m.maps()[0]), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(rows(&m.maps()[1]), vec![vec![0, 1], vec![0, 0]]);
    }

    #[test]
    fn truncated_pattern() {
        let m = builtin_representation("a21-reg:3").unwrap();
        assert_eq!(m.dims(), &DimVector(vec![1, 2, 1]));
        assert_eq!(rows(&m.maps()[0]), vec![vec![1], vec![0]]);
        assert_eq!(rows(&m.maps()[1]), vec![vec![0, 1]]);
        assert_eq!(rows(&m.maps()[2]), vec![vec![1]]);
        assert_eq!(
            builtin_representation("a21-reg:6").unwrap(),
            builtin_representation("a21-ex1").unwrap()
        );
        assert_eq!(
            builtin_representation("a21-reg:1").unwrap().dims(),
            &DimVector(vec![0, 1, 0])
        );
    }

    #[test]
    fn preprojective_family() {
        let m = builtin_representation("kronecker-preproj:1").unwrap();
        assert_eq!(m.dims(), &DimVector(vec![1, 2]));
        assert_eq!(rows(&m.maps()[0]), vec![vec![1], vec![0]]);
        assert_eq!(rows(&m.maps()[1]), vec![vec![0], vec![1]]);
        for n in 0..4 {
            let m = builtin_representation(&format!("kronecker-preproj:{n}")).unwrap();
            assert!(is_rigid(&m).unwrap());
        }
    }

    #[test]
    fn unknown_names_list_the_valid_ones() {
        for bad in [
            "a21-ex2",
            "kronecker-reg:0",
            "kronecker-reg:x",
            "a21-reg",
            "kronecker-reg:999",
        ] {
            match builtin_representation(bad) {
                Err(CliError::Usage(msg)) => assert!(msg.contains(bad), "{msg}"),
                other => panic!("{bad}: {other:?}"),
            }
        }
        let Err(CliError::Usage(msg)) = builtin_representation("nope") else {
            panic!()
        };
        for name in NAMES {
            assert!(msg.contains(name));
        }
    }

    #[test]
    fn documents_carry_the_name() {
        let doc = emit_builtin("a21-ex3").unwrap();
        assert_eq!(doc.metadata.unwrap().name.as_deref(), Some("a21-ex3"));
        assert_eq!(
            doc.representation.matrices["a2"],
            vec![vec!["0", "1"], vec!["0", "0"]]
        );
    }
}
