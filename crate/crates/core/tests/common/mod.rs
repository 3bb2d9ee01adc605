#![allow(dead_code)]

use num_integer::Integer;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::Rng;

use spherical_pi::root_data::{Isogeny, RootDatum, Series};
use spherical_pi::spherical::{self, CheckStatus, SphericalDatum};
use spherical_pi::{Int, IntMatrix, RatMatrix, Rational};

pub fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| Int::from(rng.gen_range(-bound..=bound)))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// gcd of all t×t minors, by enumeration.
pub fn gcd_of_minors(m: &IntMatrix, t: usize) -> Int {
    let mut g = Int::from(0);
    for rows in combinations(m.rows(), t) {
        for cols in combinations(m.cols(), t) {
            let minor = m.select_rows(rows.iter().copied()).select_columns(cols.iter().copied());
            g = g.gcd(&minor.det().unwrap());
        }
    }
    g
}

/// Simple roots of each type in the standard Euclidean realizations
/// (coordinates doubled so that they are integral).
pub fn euclidean_simple_roots(series: Series, n: usize) -> Vec<Vec<i64>> {
    let unit = |dim: usize, i: usize, c: i64| {
        let mut v = vec![0; dim];
        v[i] = c;
        v
    };
    let diff = |dim: usize, i: usize, j: usize| {
        let mut v = vec![0; dim];
        v[i] = 2;
        v[j] = -2;
        v
    };
    match series {
        Series::A => (0..n).map(|i| diff(n + 1, i, i + 1)).collect(),
        Series::B | Series::C | Series::D => {
            let mut roots: Vec<Vec<i64>> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            roots.push(match series {
                Series::B => unit(n, n - 1, 2),
                Series::C => unit(n, n - 1, 4),
                _ => {
                    let mut v = vec![0; n];
                    v[n - 2] = 2;
                    v[n - 1] = 2;
                    v
                }
            });
            roots
        }
        Series::E => {
            let mut roots = vec![vec![1, -1, -1, -1, -1, -1, -1, 1], {
                let mut v = vec![0; 8];
                v[0] = 2;
                v[1] = 2;
                v
            }];
            // α3 = e2 - e1, α4 = e3 - e2, ...
            for i in 0..6 {
                roots.push(diff(8, i + 1, i));
            }
            roots.truncate(n);
            roots
        }
        Series::F => vec![
            diff(4, 1, 2),
            diff(4, 2, 3),
            unit(4, 3, 2),
            vec![1, -1, -1, -1],
        ],
        Series::G => vec![vec![2, -2, 0], vec![-4, 2, 2]],
    }
}

/// `⟨α_i^∨, α_j⟩ = 2(α_i, α_j)/(α_i, α_i)` from Euclidean coordinates.
pub fn euclidean_cartan(series: Series, n: usize) -> Vec<Vec<i64>> {
    let roots = euclidean_simple_roots(series, n);
    let dot = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
    roots
        .iter()
        .map(|ai| {
            roots
                .iter()
                .map(|aj| {
                    let num = 2 * dot(ai, aj);
                    let den = dot(ai, ai);
                    assert_eq!(num % den, 0);
                    num / den
                })
                .collect()
        })
        .collect()
}

/// Every valid (series, rank) through rank 8.
pub fn all_types_through_rank_8() -> Vec<(Series, usize)> {
    let mut out = Vec::new();
    for s in [
        Series::A,
        Series::B,
        Series::C,
        Series::D,
        Series::E,
        Series::F,
        Series::G,
    ] {
        for n in 1..=8 {
            if s.is_valid_rank(n) {
                out.push((s, n));
            }
        }
    }
    out
}

/// Order of the fundamental group of the adjoint group (center of the
/// simply connected one), from the classification.
pub fn fundamental_group_order(series: Series, n: usize) -> i64 {
    match series {
        Series::A => n as i64 + 1,
        Series::B | Series::C => 2,
        Series::D => 4,
        Series::E => match n {
            6 => 3,
            7 => 2,
            _ => 1,
        },
        Series::F | Series::G => 1,
    }
}

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
pub fn rational_inverse(m: &RatMatrix) -> Option<RatMatrix> {
    let n = m.rows();
    let mut a: Vec<Vec<Rational>> = m.row_vecs();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let x = &a[col][j] * &f;
                    a[r][j] -= x;
                    let y = &inv[col][j] * &f;
                    inv[r][j] -= y;
                }
            }
        }
    }
    Some(RatMatrix::from_rows(n, inv).unwrap())
}

/// Whether `D·x` is integral for every column `x` of `finite` and zero for
/// every column of `divisible`, in ambient coordinates.
pub fn spans_inside(d: &IntMatrix, finite: &RatMatrix, divisible: &RatMatrix) -> bool {
    let d = d.to_rational();
    let image = d.mul(finite);
    let killed = d.mul(divisible);
    image.entries().iter().all(|q| q.is_integer()) && killed.is_zero()
}

/// Sandwich and containment properties of one datum; `Err` describes the
/// first violation.
pub fn check_sandwich_and_containment(sd: &SphericalDatum) -> Result<(), String> {
    let (xi, xi_q) = spherical::xi_circ(sd).map_err(|e| e.to_string())?;
    let (xi_g, xi_g_q) = spherical::xi_circ_g_set(sd).map_err(|e| e.to_string())?;
    if !xi_g_q.is_finite() {
        return Err(format!("Xi°_G quotient {xi_g_q} is not finite"));
    }
    if !xi_g_q.embeds_in(&xi_q) {
        return Err(format!("{xi_g_q} does not embed in {xi_q}"));
    }
    if !xi_g.is_subset_of(&xi).map_err(|e| e.to_string())? {
        return Err("Xi°_G is not inside Xi°".into());
    }
    // Xi°_G lands in Xi(G)
    let g_ambient = spherical::to_ambient(sd, xi_g.finite_direction_basis()).unwrap();
    if !g_ambient.entries().iter().all(|q| q.is_integer()) {
        return Err("Xi°_G does not land in the character lattice".into());
    }
    let span_ok = spherical::validate(sd, true)
        .iter()
        .all(|c| c.check != spherical::CHECK_COROOT_SPAN || c.status == CheckStatus::Pass);
    if span_ok {
        let coroots = sd.root_datum().simple_coroots();
        let f = spherical::to_ambient(sd, xi.finite_direction_basis()).unwrap();
        let k = spherical::to_ambient(sd, xi.divisible_subspace_basis()).unwrap();
        if !spans_inside(coroots, &f, &k) {
            return Err("Xi°(X) pairs non-integrally with a simple coroot".into());
        }
    }
    Ok(())
}

/// Random datum over a small standard group whose colors contain the
/// restricted coroots, so the coroot-span check passes.
pub fn random_datum(rng: &mut StdRng) -> SphericalDatum {
    let types = [
        (Series::A, 1),
        (Series::A, 2),
        (Series::A, 3),
        (Series::B, 2),
        (Series::C, 3),
        (Series::G, 2),
    ];
    let (s, n) = types[rng.gen_range(0..types.len())];
    let iso = if rng.gen() {
        Isogeny::Adjoint
    } else {
        Isogeny::SimplyConnected
    };
    let rd = RootDatum::standard(s, n, iso, rng.gen_range(0..=2)).unwrap();
    let d = rd.rank();
    let r = rng.gen_range(1..=d);
    let embedding = loop {
        let e = random_matrix(rng, d, r, 3);
        if spherical_pi::linalg::rank(&e) == r {
            break e;
        }
    };
    let restricted = rd.restrict_coroots(&embedding).unwrap();
    let extra_rows = rng.gen_range(0..=2);
    let extra = random_matrix(rng, extra_rows, r, 4);
    let colors = restricted.vstack(&extra).unwrap();
    let p = [1u64, 2, 3, 5][rng.gen_range(0..4)];
    SphericalDatum::new(rd, embedding, colors, p, "random").unwrap()
}
