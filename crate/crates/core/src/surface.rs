//! Numerical models of surfaces.
//!
//! A [`SurfaceModel`] keeps `H^2(S, Z)` as a finitely generated abelian
//! group together with the intersection form on its free quotient, the
//! canonical class `k`, the Hodge numbers, optional elliptic fibration data
//! and, for `q = 1`, the Albanese degree `[beta] = beta.E` where `E` is the
//! fibre of the Albanese map.
//!
//! Models are built from a [`SurfacePresentation`] (generators, relations,
//! and all forms written on the generators) or by [`build_log_transform`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fgab::{
    elements_equal, lattice_index, present_group, FgAbGroup, GroupElement, IntMatrix,
    MultipleFiber, PlaneVector,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hodge {
    pub q: i64,
    pub p_g: i64,
    pub chi_o: i64,
    pub c2: i64,
}

impl Hodge {
    pub fn new(q: i64, p_g: i64, chi_o: i64, c2: i64) -> Result<Self> {
        if q < 0 || p_g < 0 {
            return Err(Error::InvalidSurface(format!(
                "negative Hodge number q={q}, p_g={p_g}"
            )));
        }
        if chi_o != 1 - q + p_g {
            return Err(Error::InvalidSurface(format!(
                "chi(O_S) = {chi_o} but 1 - q + p_g = {}",
                1 - q + p_g
            )));
        }
        Ok(Self { q, p_g, chi_o, c2 })
    }
}

/// Elliptic fibration `S -> C` over a curve of genus `base_genus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibrationData {
    pub base_genus: i64,
    pub fiber: GroupElement,
    pub multiple_fibers: Vec<MultipleFiber>,
}

impl FibrationData {
    /// Checks `m_i [F_i] = [F]` and `m_i >= 2`.
    pub fn validate(&self) -> Result<()> {
        for (i, mf) in self.multiple_fibers.iter().enumerate() {
            if mf.multiplicity < 2 {
                return Err(Error::InvalidSurface(format!(
                    "multiple fibre #{} has multiplicity {} < 2",
                    i + 1,
                    mf.multiplicity
                )));
            }
            let lhs = mf.class.scale(&BigInt::from(mf.multiplicity));
            if !elements_equal(&lhs, &self.fiber)? {
                return Err(Error::InvalidSurface(format!(
                    "multiple fibre #{}: {} * [F_{}] != [F]",
                    i + 1,
                    mf.multiplicity,
                    i + 1
                )));
            }
        }
        Ok(())
    }
}

/// `K = (2g - 2 + chi(O_S)) [F] + sum_i (m_i - 1) [F_i]`.
pub fn canonical_class(
    base_genus: i64,
    chi_o: i64,
    fibration: &FibrationData,
) -> Result<GroupElement> {
    let mut k = fibration
        .fiber
        .scale(&BigInt::from(2 * base_genus - 2 + chi_o));
    for mf in &fibration.multiple_fibers {
        k = k.add(&mf.class.scale(&(BigInt::from(mf.multiplicity) - 1)))?;
    }
    Ok(k)
}

/// Fibration data written on presentation generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibrationPresentation {
    pub base_genus: i64,
    pub fiber: Vec<BigInt>,
    pub multiple_fibers: Vec<(u32, Vec<BigInt>)>,
}

/// Everything needed to build a [`SurfaceModel`], expressed on a list of
/// named generators of `H^2`.
///
/// `intersection_form` and `albanese_degrees` are given on the generators and
/// must vanish against every relation; they then descend to the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfacePresentation {
    pub name: String,
    pub generator_names: Vec<String>,
    pub relations: IntMatrix,
    pub canonical: Vec<BigInt>,
    pub intersection_form: IntMatrix,
    pub hodge: Hodge,
    pub fibration: Option<FibrationPresentation>,
    pub albanese_degrees: Option<Vec<BigInt>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceModel {
    pub name: String,
    pub generator_names: Vec<String>,
    pub h2: FgAbGroup,
    /// Gram matrix on the canonical free coordinates of `h2`.
    pub intersection_form: IntMatrix,
    pub canonical: GroupElement,
    pub hodge: Hodge,
    pub fibration: Option<FibrationData>,
    /// Albanese degree on the canonical free coordinates of `h2`.
    pub albanese_degree: Option<Vec<BigInt>>,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl SurfaceModel {
    pub fn from_presentation(p: SurfacePresentation) -> Result<Self> {
        let n = p.generator_names.len();
        let h2 = present_group(n, &p.relations)?;

        let q = &p.intersection_form;
        if q.rows() != n || q.cols() != n {
            return Err(Error::InvalidSurface(format!(
                "intersection form is {}x{}, expected {n}x{n}",
                q.rows(),
                q.cols()
            )));
        }
        if !q.is_symmetric() {
            return Err(Error::InvalidSurface(
                "intersection form is not symmetric".into(),
            ));
        }
        let rq = p.relations.mul(q)?;
        if !rq.is_zero() {
            return Err(Error::InvalidSurface(
                "intersection form does not vanish on the relations".into(),
            ));
        }
        let basis = h2.free_basis_in_generators();
        let mut form = IntMatrix::zeros(basis.len(), basis.len());
        for (a, ba) in basis.iter().enumerate() {
            let qa = q.transpose().apply(ba)?;
            for (b, bb) in basis.iter().enumerate() {
                form[(a, b)] = dot(&qa, bb);
            }
        }

        let albanese_degree = match &p.albanese_degrees {
            None => None,
            Some(alb) => {
                if alb.len() != n {
                    return Err(Error::InvalidSurface(format!(
                        "albanese_degrees has {} entries for {n} generators",
                        alb.len()
                    )));
                }
                if p.relations.apply(alb)?.iter().any(|x| !x.is_zero()) {
                    return Err(Error::InvalidSurface(
                        "Albanese degrees do not vanish on the relations".into(),
                    ));
                }
                Some(basis.iter().map(|b| dot(b, alb)).collect())
            }
        };

        let canonical = h2.element(&p.canonical)?;
        let fibration = match &p.fibration {
            None => None,
            Some(fp) => {
                let fib = FibrationData {
                    base_genus: fp.base_genus,
                    fiber: h2.element(&fp.fiber)?,
                    multiple_fibers: fp
                        .multiple_fibers
                        .iter()
                        .map(|(m, c)| {
                            Ok(MultipleFiber {
                                multiplicity: *m,
                                class: h2.element(c)?,
                            })
                        })
                        .collect::<Result<_>>()?,
                };
                fib.validate()?;
                Some(fib)
            }
        };

        Ok(Self {
            name: p.name,
            generator_names: p.generator_names,
            h2,
            intersection_form: form,
            canonical,
            hodge: p.hodge,
            fibration,
            albanese_degree,
        })
    }

    /// The class `sum_i coeffs[i] g_i`.
    pub fn class<T: Into<BigInt> + Clone>(&self, coeffs: &[T]) -> Result<GroupElement> {
        self.h2.element(coeffs)
    }

    fn check_member(&self, x: &GroupElement) -> Result<()> {
        if *x.group() == self.h2 {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn pairing(&self, a: &GroupElement, b: &GroupElement) -> Result<BigInt> {
        self.check_member(a)?;
        self.check_member(b)?;
        let qb = self.intersection_form.apply(b.free_part())?;
        Ok(dot(a.free_part(), &qb))
    }

    pub fn albanese(&self, a: &GroupElement) -> Result<BigInt> {
        self.check_member(a)?;
        let alb = self
            .albanese_degree
            .as_ref()
            .ok_or(Error::MissingAlbanese)?;
        Ok(dot(alb, a.free_part()))
    }

    /// `12 chi(O_S) - k^2 - c_2`, zero for a Noether-consistent model.
    pub fn noether_defect(&self) -> Result<BigInt> {
        let k_sq = self.pairing(&self.canonical, &self.canonical)?;
        Ok(BigInt::from(12 * self.hodge.chi_o) - k_sq - BigInt::from(self.hodge.c2))
    }
}

/// Torsion point `(u + v omega) / m` of `C / <1, omega>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorsionPoint {
    pub m: u32,
    pub u: i64,
    pub v: i64,
}

impl TorsionPoint {
    fn as_plane_vector(&self) -> PlaneVector {
        let m = BigInt::from(self.m);
        (
            BigRational::new(self.u.into(), m.clone()),
            BigRational::new(self.v.into(), m),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogTransformInput {
    pub zetas: Vec<TorsionPoint>,
}

/// Logarithmic transforms of `P^1 x F` at the given torsion points.
///
/// Generators of `H^2` are `F, F_1, ..., F_r, sigma`, where `sigma` spans the
/// extra `Z` summand. The fibre classes span an isotropic sublattice; `sigma`
/// is isotropic and pairs to `1` with the primitive generator of the fibre
/// direction, which makes the form on the free quotient the hyperbolic plane.
/// The Albanese fibre `E` is a multiple of `sigma` modulo torsion, so
/// `[F] = [Gamma' : Gamma]`, `[F_i] = [F] / m_i` and `[sigma] = 0`.
pub fn build_log_transform(input: &LogTransformInput) -> Result<SurfaceModel> {
    let r = input.zetas.len();
    for (i, z) in input.zetas.iter().enumerate() {
        if z.m == 0 {
            return Err(Error::InvalidZeta {
                index: i + 1,
                reason: "m must be positive".into(),
            });
        }
        let g = BigInt::from(z.m)
            .gcd(&BigInt::from(z.u))
            .gcd(&BigInt::from(z.v));
        if !g.is_one() {
            return Err(Error::InvalidZeta {
                index: i + 1,
                reason: format!("gcd(m, u, v) = {g}, expected 1"),
            });
        }
    }

    let points: Vec<PlaneVector> = input
        .zetas
        .iter()
        .map(TorsionPoint::as_plane_vector)
        .collect();
    let sum_u: BigRational = points.iter().map(|p| p.0.clone()).sum();
    let sum_v: BigRational = points.iter().map(|p| p.1.clone()).sum();
    if !sum_u.is_zero() || !sum_v.is_zero() {
        return Err(Error::NonProjective {
            sum_u: Box::new(sum_u),
            sum_v: Box::new(sum_v),
        });
    }

    // columns: F, F_1..F_r, sigma
    let n = r + 2;
    let sigma = r + 1;
    let mut relations = Vec::with_capacity(r + 2);
    for (i, z) in input.zetas.iter().enumerate() {
        let mut row = vec![0i64; n];
        row[0] = -1;
        row[i + 1] = z.m.into();
        relations.push(row);
    }
    let mut u_row = vec![0i64; n];
    let mut v_row = vec![0i64; n];
    for (i, z) in input.zetas.iter().enumerate() {
        u_row[i + 1] = z.u;
        v_row[i + 1] = z.v;
    }
    relations.push(u_row);
    relations.push(v_row);
    let relations = IntMatrix::from_rows(n, &relations)?;

    let h2 = present_group(n, &relations)?;
    if h2.free_rank() != 2 {
        return Err(Error::Consistency(format!(
            "H^2 has free rank {}, expected 2",
            h2.free_rank()
        )));
    }
    let divisibility = h2
        .generator(0)?
        .free_part()
        .iter()
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if divisibility.is_zero() {
        return Err(Error::Consistency("fibre class is torsion".into()));
    }

    let exact_div = |num: &BigInt, m: u32, what: &str| -> Result<BigInt> {
        let (q, rem) = num.div_rem(&BigInt::from(m));
        if rem.is_zero() {
            Ok(q)
        } else {
            Err(Error::Consistency(format!(
                "{what}: {num} is not divisible by {m}"
            )))
        }
    };

    let mut form = IntMatrix::zeros(n, n);
    form[(0, sigma)] = divisibility.clone();
    form[(sigma, 0)] = divisibility.clone();
    for (i, z) in input.zetas.iter().enumerate() {
        let c = exact_div(&divisibility, z.m, "pairing of sigma with a multiple fibre")?;
        form[(i + 1, sigma)] = c.clone();
        form[(sigma, i + 1)] = c;
    }

    let one = BigRational::one();
    let zero = BigRational::zero();
    let base = [(one.clone(), zero.clone()), (zero, one)];
    let fiber_degree = lattice_index(&base, &points)?;
    let mut albanese = vec![BigInt::zero(); n];
    albanese[0] = fiber_degree.clone();
    for (i, z) in input.zetas.iter().enumerate() {
        albanese[i + 1] = exact_div(&fiber_degree, z.m, "Albanese degree of a multiple fibre")?;
    }

    let (g, chi_o) = (0i64, 0i64);
    let mut canonical = vec![BigInt::zero(); n];
    canonical[0] = BigInt::from(2 * g - 2 + chi_o);
    for (i, z) in input.zetas.iter().enumerate() {
        canonical[i + 1] = BigInt::from(z.m) - 1;
    }

    let unit = |i: usize| -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); n];
        v[i] = BigInt::one();
        v
    };
    let mut names = vec!["F".to_string()];
    names.extend((1..=r).map(|i| format!("F{i}")));
    names.push("sigma".to_string());

    SurfaceModel::from_presentation(SurfacePresentation {
        name: "log_transform".into(),
        generator_names: names,
        relations,
        canonical,
        intersection_form: form,
        hodge: Hodge::new(1, 0, 0, 0)?,
        fibration: Some(FibrationPresentation {
            base_genus: g,
            fiber: unit(0),
            multiple_fibers: input
                .zetas
                .iter()
                .enumerate()
                .filter(|(_, z)| z.m >= 2)
                .map(|(i, z)| (z.m, unit(i + 1)))
                .collect(),
        }),
        albanese_degrees: Some(albanese),
    })
}

/// Numerical invariants of a class `beta` on a surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumInv {
    pub beta_sq: BigInt,
    pub beta_k: BigInt,
    pub k_sq: BigInt,
    /// Arithmetic genus: `2h - 2 = beta^2 + beta.k`.
    pub h: BigInt,
    /// `2 chi(beta) = beta^2 - beta.k + 2 chi(O_S)`.
    pub chi_beta: BigInt,
    /// `2m = beta^2 - beta.k`, the expected dimension of the Hilbert scheme
    /// of curves in class `beta`.
    pub m: BigInt,
    /// `[beta]`, present when the model carries an Albanese form.
    pub alb_deg: Option<BigInt>,
}

fn half(x: BigInt, quantity: &'static str) -> Result<BigInt> {
    let (q, r) = x.div_rem(&BigInt::from(2));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::NonIntegral {
            quantity,
            numerator: x,
        })
    }
}

pub fn numerical_invariants(s: &SurfaceModel, beta: &GroupElement) -> Result<NumInv> {
    let beta_sq = s.pairing(beta, beta)?;
    let beta_k = s.pairing(beta, &s.canonical)?;
    let k_sq = s.pairing(&s.canonical, &s.canonical)?;
    let h = half(&beta_sq + &beta_k + 2, "arithmetic genus")?;
    let m = half(&beta_sq - &beta_k, "point-insertion count")?;
    let chi_beta = &m + BigInt::from(s.hodge.chi_o);
    let alb_deg = match s.albanese_degree {
        Some(_) => Some(s.albanese(beta)?),
        None => None,
    };
    Ok(NumInv {
        beta_sq,
        beta_k,
        k_sq,
        h,
        chi_beta,
        m,
        alb_deg,
    })
}

impl NumInv {
    /// `beta(beta - k)`.
    pub fn beta_dot_beta_minus_k(&self) -> BigInt {
        &self.beta_sq - &self.beta_k
    }

    pub fn is_negative_case(&self) -> bool {
        self.beta_dot_beta_minus_k().is_negative()
    }
}
