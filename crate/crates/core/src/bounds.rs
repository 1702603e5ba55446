//! Assembles every bound on `Q(n, ceil(r n))` for given `(r, n)` — the
//! rate constants, the two-sided inverse-Ramsey sandwich, the
//! partition-split upper bound and its two-term corollary — and verifies
//! all of them against brute-force ground truth on small orders.
//!
//! All rate arithmetic is exact rational; no floating point exists
//! anywhere in this crate.

use crate::construct::{join_construction, plan_join, simple_upper_witness};
use crate::error::Result;
use crate::interval::ValueInterval;
use crate::qnc::{ground_truth, q_general, q_small, GroundTruth};
use crate::ramsey::witness::WitnessSearchOptions;
use crate::ramsey::inverse_ramsey;
use crate::rational::RationalRate;
use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

/// The derived constants at rate `r` and order `n`:
/// `k = floor(1/r)`, `c = ceil(rn)`, `c_r = ((k+1)/k) r - 1/k`,
/// `d_r = 1 / ceil(1/c_r)`, `m = n - k c`, `l = (k+1) c - n`.
///
/// `c_r > 0` always (since `r > 1/(k+1)`) and `l >= 1` always; `m <= 0`
/// flags the split construction as inapplicable at this `(r, n)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RateParams {
    pub r: RationalRate,
    pub n: usize,
    pub k: usize,
    pub c: usize,
    pub c_r: RationalRate,
    pub d_r: RationalRate,
    pub l: i64,
    pub m: i64,
}

pub fn rate_params(r: &RationalRate, n: usize) -> RateParams {
    assert!(n >= 1);
    let k = r.floor_inverse();
    let c = r.ceil_mul(n);
    let kq = Ratio::from_integer(k as i64);
    let c_r = (kq + 1) / kq * r.as_ratio() - kq.recip();
    assert!(c_r > Ratio::from_integer(0), "c_r > 0 since r > 1/(k+1)");
    let d_r = c_r.recip().ceil().recip();
    let l = ((k + 1) * c) as i64 - n as i64;
    let m = n as i64 - (k * c) as i64;
    debug_assert!(l >= 1);
    debug_assert_eq!(k as i64 * l + (k as i64 + 1) * m, n as i64);
    RateParams {
        r: *r,
        n,
        k,
        c,
        c_r: rate_from_ratio(c_r),
        d_r: rate_from_ratio(d_r),
        l,
        m,
    }
}

fn rate_from_ratio(x: Ratio<i64>) -> RationalRate {
    RationalRate::new(*x.numer(), *x.denom()).expect("derived constants lie in (0,1]")
}

/// `ceil(x * v)` in exact arithmetic.
fn ceil_rate_mul(x: &RationalRate, v: usize) -> usize {
    (x.as_ratio() * Ratio::from_integer(v as i64))
        .ceil()
        .to_integer()
        .to_usize()
        .expect("fits usize")
}

/// Witness strings attached to a [`BoundReport`].
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct BoundWitnesses {
    /// Minimizer from the brute-force table (canonical graph6).
    pub exact_g6: Option<String>,
    /// Single-Ramsey-graph construction achieving the one-term bound.
    pub simple_g6: Option<String>,
    /// Join construction achieving the split bound.
    pub join_g6: Option<String>,
}

/// All bounds assembled at one `(r, n)`.
///
/// `lower` is the integer consequence `ceil(d_r * omega(n,k))` taken on
/// both interval ends; the asserted bound is its certain side `lower.lo`.
/// Comparisons against an exact value are conservative: the lower bound
/// uses the low end of `omega`, the upper bounds use high ends, so an
/// unknown Ramsey value can never produce a false confirmation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundReport {
    pub params: RateParams,
    pub omega_nk: ValueInterval,
    pub lower: ValueInterval,
    pub upper_one_term: ValueInterval,
    /// `q(l,k) + q(m,k+1)` when `m > 0` and `1/r` is not an integer.
    pub upper_split: Option<ValueInterval>,
    /// `omega(kl,k) + omega((k+1)m, k+1)` under the same applicability.
    pub upper_two_term: Option<ValueInterval>,
    /// Brute-force `Q(n, c)` when the order is within the search limit.
    pub exact: Option<usize>,
    pub witnesses: BoundWitnesses,
}

#[derive(Clone, Debug)]
pub struct SandwichOptions {
    pub enum_limit: usize,
    /// Attach constructive witnesses where the constructions succeed
    /// cheaply (no local search).
    pub attach_witnesses: bool,
}

impl Default for SandwichOptions {
    fn default() -> Self {
        Self {
            enum_limit: crate::enumerate::DEFAULT_LIMIT,
            attach_witnesses: false,
        }
    }
}

pub fn sandwich(r: &RationalRate, n: usize, opts: &SandwichOptions) -> Result<BoundReport> {
    let params = rate_params(r, n);
    let omega_nk = inverse_ramsey(n, params.k);
    let lower = ValueInterval {
        lo: ceil_rate_mul(&params.d_r, omega_nk.lo),
        hi: omega_nk.hi.map(|h| ceil_rate_mul(&params.d_r, h)),
    };
    let applicable = params.m > 0 && !r.is_integer_reciprocal();
    let (upper_split, upper_two_term) = if applicable {
        let l = params.l as usize;
        let m = params.m as usize;
        let split = q_general(l, params.k)
            .value
            .sum(&q_general(m, params.k + 1).value);
        let cor = inverse_ramsey(params.k * l, params.k)
            .sum(&inverse_ramsey((params.k + 1) * m, params.k + 1));
        (Some(split), Some(cor))
    } else {
        (None, None)
    };

    let mut witnesses = BoundWitnesses::default();
    let exact = if n <= opts.enum_limit.min(crate::enumerate::HARD_LIMIT) {
        let (q, rec) = crate::qnc::qnc_bruteforce(n, params.c, opts.enum_limit)?;
        witnesses.exact_g6 = rec.witness_g6;
        Some(q)
    } else {
        None
    };

    if opts.attach_witnesses {
        let wopts = WitnessSearchOptions {
            skip_local_search: true,
            enum_limit: opts.enum_limit,
            ..Default::default()
        };
        if let Ok((_, rep)) = simple_upper_witness(r, n, None, &wopts) {
            witnesses.simple_g6 = Some(rep.graph_g6);
        }
        if applicable {
            if let Ok(plan) = plan_join(r, n) {
                if let Ok((_, rep)) = join_construction(&plan, None, &wopts) {
                    witnesses.join_g6 = Some(rep.final_g6);
                }
            }
        }
    }

    Ok(BoundReport {
        params,
        omega_nk,
        lower,
        upper_one_term: omega_nk,
        upper_split,
        upper_two_term,
        exact,
        witnesses,
    })
}

// ---- verification against ground truth ---------------------------------

/// One line of the verification table. Unused fields stay `None`; the
/// CSV writer renders those as empty cells.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyRow {
    pub kind: String,
    pub r: Option<RationalRate>,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub c: Option<usize>,
    pub d_r: Option<RationalRate>,
    pub omega_lo: Option<usize>,
    pub omega_hi: Option<usize>,
    pub omega_brute: Option<usize>,
    pub q_exact: Option<usize>,
    pub lower: Option<usize>,
    pub upper: Option<usize>,
    pub pass: bool,
    pub detail: String,
}

impl VerifyRow {
    fn blank(kind: &str) -> Self {
        VerifyRow {
            kind: kind.to_string(),
            r: None,
            n: None,
            k: None,
            c: None,
            d_r: None,
            omega_lo: None,
            omega_hi: None,
            omega_brute: None,
            q_exact: None,
            lower: None,
            upper: None,
            pass: false,
            detail: String::new(),
        }
    }
}

/// The whole verification run: per-row outcomes plus an aggregate flag.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n_max: usize,
    pub rates: Vec<RationalRate>,
    pub rows: Vec<VerifyRow>,
    pub all_pass: bool,
}

/// Checks, for every rate in `rates` and every `1 <= n <= n_max`:
///
/// * the table-derived `omega(n,k)` is exact and equals brute force;
/// * `ceil(d_r * omega(n,k)) <= Q(n, ceil(rn)) <= omega(n,k)`;
/// * when applicable, `Q <= q(l,k) + q(m,k+1) <= omega(kl,k) +
///   omega((k+1)m, k+1)`;
/// * the ratio lemma `omega(ceil(rn), k) * ceil(1/r) >= omega(n,k)`
///   whenever `r n >= k`;
///
/// plus, independent of the rate grid: the near-diagonal closed form
/// `Q(n, n-k) = n - 2k + q(k)` for all `n <= n_max`, `n >= 2k+3`, and
/// monotonicity/subadditivity of the brute-force `omega` table.
pub fn verify_theorems(
    rates: &[RationalRate],
    n_max: usize,
    enum_limit: usize,
) -> Result<VerificationReport> {
    assert!(n_max >= 1);
    let mut rates = rates.to_vec();
    rates.sort();
    rates.dedup();

    // Ground truth per order, computed once.
    let truth: Vec<GroundTruth> = (1..=n_max)
        .map(|n| ground_truth(n, enum_limit))
        .collect::<Result<_>>()?;
    let omega_brute = |n: usize, k: usize| -> usize { truth[n - 1].omega[k.min(n)] };
    let q_brute = |n: usize, c: usize| -> usize { truth[n - 1].qnc[c - 1].q };

    let mut rows = Vec::new();

    for r in &rates {
        for n in 1..=n_max {
            let params = rate_params(r, n);
            let (k, c) = (params.k, params.c);
            let w_table = inverse_ramsey(n, k);
            let w_brute = omega_brute(n, k);
            let q = q_brute(n, c);

            let mut row = VerifyRow::blank("sandwich");
            row.r = Some(*r);
            row.n = Some(n);
            row.k = Some(k);
            row.c = Some(c);
            row.d_r = Some(params.d_r);
            row.omega_lo = Some(w_table.lo);
            row.omega_hi = w_table.hi;
            row.omega_brute = Some(w_brute);
            row.q_exact = Some(q);
            let lower = ceil_rate_mul(&params.d_r, w_table.lo);
            row.lower = Some(lower);
            row.upper = w_table.hi;
            let agree = w_table.exact_value() == Some(w_brute);
            let lower_ok = lower <= q;
            let upper_ok = w_table.hi.map(|h| q <= h).unwrap_or(true);
            row.pass = agree && lower_ok && upper_ok;
            row.detail = if row.pass {
                String::new()
            } else {
                format!(
                    "agree={agree} lower_ok={lower_ok} upper_ok={upper_ok} (table {w_table}, brute {w_brute})"
                )
            };
            rows.push(row);

            // Ratio lemma, applicable when r n >= k.
            let rn_ge_k = r.as_ratio() * Ratio::from_integer(n as i64)
                >= Ratio::from_integer(k as i64);
            if rn_ge_k {
                let ceil_inv_r = (r.as_ratio().recip())
                    .ceil()
                    .to_integer()
                    .to_usize()
                    .expect("small");
                let lhs = omega_brute(c, k) * ceil_inv_r;
                let rhs = omega_brute(n, k);
                let mut row = VerifyRow::blank("ratio_lemma");
                row.r = Some(*r);
                row.n = Some(n);
                row.k = Some(k);
                row.c = Some(c);
                row.lower = Some(lhs);
                row.upper = Some(rhs);
                row.pass = lhs >= rhs;
                row.detail = format!("omega({c},{k})*{ceil_inv_r} >= omega({n},{k})");
                rows.push(row);
            }

            // Split chain, applicable when m > 0 (and hence 1/r not integral).
            if params.m > 0 && !r.is_integer_reciprocal() {
                let l = params.l as usize;
                let m = params.m as usize;
                let split = q_general(l, k).value.sum(&q_general(m, k + 1).value);
                let two_term =
                    inverse_ramsey(k * l, k).sum(&inverse_ramsey((k + 1) * m, k + 1));
                if let (Some(split_v), Some(two_v)) =
                    (split.exact_value(), two_term.exact_value())
                {
                    let mut row = VerifyRow::blank("split_chain");
                    row.r = Some(*r);
                    row.n = Some(n);
                    row.k = Some(k);
                    row.c = Some(c);
                    row.q_exact = Some(q);
                    row.lower = Some(split_v);
                    row.upper = Some(two_v);
                    row.pass = q <= split_v && split_v <= two_v;
                    row.detail = format!("l={l} m={m}: Q <= q(l,k)+q(m,k+1) <= two-term");
                    rows.push(row);
                }
            }
        }
    }

    // Near-diagonal closed form, independent of the rate grid.
    for n in 1..=n_max {
        for k in 1..=n {
            if n < 2 * k + 3 {
                continue;
            }
            let predicted = q_small(k).value.add_const(n - 2 * k);
            let actual = q_brute(n, n - k);
            let mut row = VerifyRow::blank("near_diagonal");
            row.n = Some(n);
            row.k = Some(k);
            row.c = Some(n - k);
            row.q_exact = Some(actual);
            row.lower = predicted.exact_value();
            row.upper = predicted.exact_value();
            row.pass = predicted.exact_value() == Some(actual);
            row.detail = format!("Q({n},{}) = {n}-2*{k}+q({k})", n - k);
            rows.push(row);
        }
    }

    // Monotonicity and subadditivity of the brute-force omega table.
    for k in 1..=n_max {
        let mut violations = 0usize;
        let mut checked = 0usize;
        for n in 1..n_max {
            checked += 1;
            if omega_brute(n + 1, k) < omega_brute(n, k) {
                violations += 1;
            }
        }
        for n in 1..=n_max {
            if k < n {
                checked += 1;
                if omega_brute(n, k + 1) > omega_brute(n, k) {
                    violations += 1;
                }
            }
        }
        let mut row = VerifyRow::blank("monotone");
        row.k = Some(k);
        row.pass = violations == 0;
        row.detail = format!("checked={checked} violations={violations}");
        rows.push(row);

        let mut violations = 0usize;
        let mut checked = 0usize;
        for a in 1..n_max {
            for b in a..=(n_max - a) {
                checked += 1;
                if omega_brute(a + b, k) > omega_brute(a, k) + omega_brute(b, k) {
                    violations += 1;
                }
            }
        }
        let mut row = VerifyRow::blank("subadditive");
        row.k = Some(k);
        row.pass = violations == 0;
        row.detail = format!("checked={checked} violations={violations}");
        rows.push(row);
    }

    let all_pass = rows.iter().all(|r| r.pass);
    Ok(VerificationReport {
        n_max,
        rates,
        rows,
        all_pass,
    })
}

impl VerificationReport {
    /// Fixed-column CSV; byte-stable across runs and thread counts.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "kind,r,n,k,c,d_r,omega_lo,omega_hi,omega_brute,q_exact,lower,upper,pass,detail\n",
        );
        fn cell<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map(|x| x.to_string()).unwrap_or_default()
        }
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                row.kind,
                cell(&row.r),
                cell(&row.n),
                cell(&row.k),
                cell(&row.c),
                cell(&row.d_r),
                cell(&row.omega_lo),
                cell(&row.omega_hi),
                cell(&row.omega_brute),
                cell(&row.q_exact),
                cell(&row.lower),
                cell(&row.upper),
                row.pass,
                row.detail.replace(',', ";"),
            ));
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerifyRow> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

/// Checks `c_r = r^2` at `r = 1/k` — the reciprocal-rate identity — and
/// returns the exact `c_r` for inspection.
pub fn reciprocal_rate_constant(k: usize) -> (RationalRate, bool) {
    let r = RationalRate::new(1, k as i64).expect("1/k is a valid rate");
    let params = rate_params(&r, k.max(1));
    let square = r.as_ratio() * r.as_ratio();
    (params.c_r, params.c_r.as_ratio() == square)
}
