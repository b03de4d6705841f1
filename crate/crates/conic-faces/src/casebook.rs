//! Executable reproductions of the boundary-of-theory examples: the
//! symmetric product of orthogonal boundary rays that generates no face, the
//! exposed-ray construction over polyhedral and Lorentz cones, and the
//! vectorized-PSD cone whose boundary slice is not a face.

use crate::cop::{
    cop_membership, feasible_t_interval, one_v, ray_classify, CertificateMode,
    ExposingCertificate, TInterval,
};
use crate::cp::cp_membership;
use crate::error::{Error, Result};
use crate::linalg::{
    self, dot, norm, rank_of, scale_vec, svec, svec_inverse, sym_eigen, tensor_square, Subspace,
    SymMatrix,
};
use crate::soc::{classify_point, interior_basis_from_witness, PointClass, SocVector};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

/// One verified statement of a case: what was expected, what was computed,
/// and whether they agree.
#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    pub description: String,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
}

/// A case with its claims; `overall` is the conjunction of the claim flags.
#[derive(Debug, Clone, Serialize)]
pub struct CaseReport {
    pub case_id: String,
    pub claims: Vec<Claim>,
    pub overall: bool,
}

impl CaseReport {
    fn new(case_id: &str) -> Self {
        Self {
            case_id: case_id.into(),
            claims: vec![],
            overall: true,
        }
    }

    fn claim(&mut self, description: &str, expected: Value, computed: Value, pass: bool) {
        self.claims.push(Claim {
            description: description.into(),
            expected,
            computed,
            pass,
        });
        self.overall &= pass;
    }
}

/// Closed-form copositivity over the nonnegative orthant in the plane:
/// `B_11 >= 0`, `B_22 >= 0`, and `B_12 + sqrt(B_11 B_22) >= 0`.
pub fn cop2_copositive(b: &SymMatrix) -> Result<bool> {
    if b.order() != 2 {
        return Err(Error::Dimension("the criterion is for order 2".into()));
    }
    let tol = 1e-12 * (1.0 + b.fro_norm());
    let (b11, b22, b12) = (b.get(0, 0), b.get(1, 1), b.get(0, 1));
    if b11 < -tol || b22 < -tol {
        return Ok(false);
    }
    Ok(b12 + (b11.max(0.0) * b22.max(0.0)).sqrt() >= -tol)
}

/// The symmetric product of the orthogonal boundary rays `(1; v)` and
/// `(1; -v)`, `M = 2 diag(1, -v v')`: copositive of rank 2, yet extreme only
/// in the plane case where it degenerates to `2 J_2`.
pub fn case_nonface_product(n: usize, v: &[f64]) -> Result<CaseReport> {
    if v.len() + 1 != n || n < 2 {
        return Err(Error::Dimension("v must have length n - 1".into()));
    }
    if (norm(v) - 1.0).abs() > 1e-9 {
        return Err(Error::Domain("v must be a unit vector".into()));
    }
    let tol = crate::DEFAULT_TOL;
    let a = one_v(v);
    let b = {
        let mut out = vec![1.0];
        out.extend(v.iter().map(|c| -c));
        out
    };
    // (1; v)(1; -v)' + (1; -v)(1; v)'
    let m = SymMatrix::from_fn(n, |i, j| a[i] * b[j] + b[i] * a[j]);

    let mut report = CaseReport::new("nonface_product");

    let member = cop_membership(&m, tol)?.is_member();
    report.claim(
        "the symmetric product is copositive",
        json!(true),
        json!(member),
        member,
    );

    let rank = rank_of(&m, tol);
    report.claim("rank of the product", json!(2), json!(rank), rank == 2);

    let family = ray_classify(&m, tol)?;
    let expected_family = if n >= 3 { "not_extreme" } else { "extreme_j" };
    report.claim(
        "ray classification of the product",
        json!(expected_family),
        json!(family.tag()),
        family.tag() == expected_family,
    );

    let interval_nonempty = matches!(
        feasible_t_interval(&m, tol),
        TInterval::Interval { .. }
    );
    report.claim(
        "feasible shift interval is nonempty",
        json!(true),
        json!(interval_nonempty),
        interval_nonempty,
    );

    Ok(report)
}

/// Underlying cone for the exposed-ray construction: the Lorentz cone or a
/// two-generator polyhedral cone in the plane.
#[derive(Debug, Clone)]
pub enum ConeSpec {
    Soc(usize),
    Polyhedral2 { g1: [f64; 2], g2: [f64; 2] },
}

impl ConeSpec {
    fn dim(&self) -> usize {
        match self {
            ConeSpec::Soc(n) => *n,
            ConeSpec::Polyhedral2 { .. } => 2,
        }
    }

    /// Inward normals of the polyhedral cone, each paired with unit norm.
    fn polyhedral_normals(g1: &[f64; 2], g2: &[f64; 2]) -> Result<[Vec<f64>; 2]> {
        let det = g1[0] * g2[1] - g1[1] * g2[0];
        if det.abs() < 1e-12 * (1.0 + norm(g1) * norm(g2)) {
            return Err(Error::Precondition(
                "polyhedral generators must be linearly independent".into(),
            ));
        }
        let mut d1 = vec![-g2[1], g2[0]];
        if dot(&d1, g1) < 0.0 {
            d1 = scale_vec(&d1, -1.0);
        }
        let mut d2 = vec![-g1[1], g1[0]];
        if dot(&d2, g2) < 0.0 {
            d2 = scale_vec(&d2, -1.0);
        }
        Ok([
            scale_vec(&d1, 1.0 / norm(&d1)),
            scale_vec(&d2, 1.0 / norm(&d2)),
        ])
    }

    /// Positive exactly on the interior; concave and 1-homogeneous.
    fn margin(&self, x: &SocVector) -> Result<f64> {
        match self {
            ConeSpec::Soc(_) => Ok(x.margin()),
            ConeSpec::Polyhedral2 { g1, g2 } => {
                let normals = Self::polyhedral_normals(g1, g2)?;
                Ok(normals
                    .iter()
                    .map(|d| dot(d, x.as_slice()))
                    .fold(f64::INFINITY, f64::min))
            }
        }
    }

    fn in_cone(&self, x: &SocVector, tol: f64) -> Result<bool> {
        Ok(self.margin(x)? >= -tol * (1.0 + x.norm()))
    }

    /// Membership of a symmetric matrix in `COP(K)`.
    fn cop_member(&self, a: &SymMatrix, tol: f64) -> Result<bool> {
        match self {
            ConeSpec::Soc(_) => Ok(cop_membership(a, tol)?.is_member()),
            ConeSpec::Polyhedral2 { g1, g2 } => {
                let cols = [g1.to_vec(), g2.to_vec()];
                cop2_copositive(&a.congruence(&cols))
            }
        }
    }
}

/// The exposed-ray construction for `x ∉ K* ∪ (-K*)`: a point
/// `y ∈ {x}^⊥ ∩ int K` from the strict convex combination of inner-product
/// witnesses, extended to a basis `V` of `{x}^⊥` inside `int K`; then
/// `H = H(V)` exposes the ray through `x x'` in `COP(K)`.
pub fn exposed_ray_general(x: &SocVector, cone: &ConeSpec) -> Result<CaseReport> {
    let n = cone.dim();
    let tol = crate::DEFAULT_TOL;
    if x.dim() != n {
        return Err(Error::Dimension("x must live in the cone's space".into()));
    }

    // Witnesses y+ (interior, positive product) and y- (member, negative
    // product); their existence is the precondition x ∉ K* ∪ (-K*).
    let (y_plus, y_minus) = match cone {
        ConeSpec::Soc(_) => {
            if classify_point(x, tol) != PointClass::Exterior
                || classify_point(&x.neg(), tol) != PointClass::Exterior
            {
                return Err(Error::Precondition(
                    "x must lie outside L^n ∪ (-L^n)".into(),
                ));
            }
            let tail_norm = norm(x.tail());
            let s = 0.5 * (1.0 + x.head().abs() / tail_norm);
            let dir = scale_vec(x.tail(), s / tail_norm);
            let plus = SocVector::concat(1.0, &dir)?;
            let minus = SocVector::concat(1.0, &scale_vec(&dir, -1.0))?;
            (plus, minus)
        }
        ConeSpec::Polyhedral2 { g1, g2 } => {
            let p1 = dot(g1, x.as_slice());
            let p2 = dot(g2, x.as_slice());
            let scale = tol * (1.0 + x.norm());
            let (gp, gm) = if p1 > scale && p2 < -scale {
                (g1.to_vec(), g2.to_vec())
            } else if p2 > scale && p1 < -scale {
                (g2.to_vec(), g1.to_vec())
            } else {
                return Err(Error::Precondition(
                    "x must lie outside K* ∪ (-K*): the generator products must straddle zero"
                        .into(),
                ));
            };
            // Pull the positive-product generator into the interior without
            // losing the positive product.
            let pp = dot(&gp, x.as_slice());
            let pm = dot(&gm, x.as_slice());
            let delta = 0.5 * (pp / -pm).min(1.0);
            let mut plus = gp.clone();
            linalg::axpy(&mut plus, delta, &gm);
            (SocVector::new(plus)?, SocVector::new(gm)?)
        }
    };

    let fp = dot(x.as_slice(), y_plus.as_slice());
    let fm = dot(x.as_slice(), y_minus.as_slice());
    let mut y = scale_vec(y_minus.as_slice(), fp / (fp - fm));
    linalg::axpy(&mut y, -fm / (fp - fm), y_plus.as_slice());
    let y = SocVector::new(scale_vec(&y, 1.0 / norm(&y)))?;

    let mut report = CaseReport::new(match cone {
        ConeSpec::Soc(_) => "exposed_ray_soc",
        ConeSpec::Polyhedral2 { .. } => "exposed_ray_polyhedral",
    });

    let orthogonal = dot(x.as_slice(), y.as_slice()).abs() <= 1e-10 * (1.0 + x.norm());
    report.claim(
        "constructed point is orthogonal to x",
        json!(0.0),
        json!(dot(x.as_slice(), y.as_slice())),
        orthogonal,
    );
    let y_margin = cone.margin(&y)?;
    report.claim(
        "constructed point is interior to K",
        json!("positive margin"),
        json!(y_margin),
        y_margin > 0.0,
    );

    // Basis of {x}^⊥ inside int K by the margin shift.
    let hyper = Subspace::hyperplane_perp(x.as_slice());
    let margin_fn = |p: &SocVector| cone.margin(p).expect("validated generators");
    let atoms = interior_basis_from_witness(&hyper, &y, &margin_fn);
    let all_interior = atoms.iter().all(|a| margin_fn(a) > 0.0);
    let span_dim = linalg::orthonormalize(
        n,
        &atoms.iter().map(|a| a.as_slice().to_vec()).collect::<Vec<_>>(),
        1e-10,
    )
    .dim();
    report.claim(
        "basis of {x}^⊥ lies in int K and spans it",
        json!({"interior": true, "span": n - 1}),
        json!({"interior": all_interior, "span": span_dim}),
        all_interior && span_dim == n - 1,
    );

    let cert = ExposingCertificate::from_atoms(n, atoms, CertificateMode::AmbientAtoms)?;
    let h = &cert.h;

    let h_in_cp = match cone {
        ConeSpec::Soc(_) => {
            cp_membership(h, tol)?.is_member()
                && cert
                    .atoms
                    .iter()
                    .all(|a| classify_point(a, tol) != PointClass::Exterior)
        }
        ConeSpec::Polyhedral2 { .. } => {
            let mut ok = true;
            for a in &cert.atoms {
                ok &= cone.in_cone(a, tol)?;
            }
            ok
        }
    };
    report.claim("H lies in CP(K)", json!(true), json!(h_in_cp), h_in_cp);

    let xsq = tensor_square(x.as_slice());
    let ip = xsq.inner(h);
    let annihilates = ip.abs() <= 1e-9 * (1.0 + xsq.fro_norm() * h.fro_norm());
    report.claim(
        "H annihilates the square of x",
        json!(0.0),
        json!(ip),
        annihilates,
    );

    // Sampled members of COP(K) away from the ray must see H positively.
    let mut rng = ChaCha8Rng::seed_from_u64(0xFACE5);
    let mut checked = 0;
    let mut positive = true;
    let mut attempts = 0;
    while checked < 50 && attempts < 5000 {
        attempts += 1;
        let a = match cone {
            ConeSpec::Soc(_) => {
                let mut acc = SymMatrix::zeros(n);
                for _ in 0..3 {
                    let g: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
                    acc = acc.add(&tensor_square(&g));
                }
                acc.add(&SymMatrix::j_matrix(n).scale(rng.gen_range(0.0..1.0)))
            }
            ConeSpec::Polyhedral2 { .. } => {
                let m = SymMatrix::from_fn(2, |_, _| rng.gen_range(-1.0..1.0));
                if !cone.cop_member(&m, tol)? {
                    continue;
                }
                m
            }
        };
        let cosine = a.inner(&xsq) / (a.fro_norm() * xsq.fro_norm());
        if cosine >= 1.0 - 1e-6 {
            continue;
        }
        checked += 1;
        if a.inner(h) <= 1e-10 * (1.0 + a.fro_norm() * h.fro_norm()) {
            positive = false;
        }
    }
    report.claim(
        "sampled members off the ray see H positively",
        json!({"samples": 50, "all_positive": true}),
        json!({"samples": checked, "all_positive": positive}),
        positive && checked == 50,
    );

    Ok(report)
}

/// The vectorized PSD cone of order 3: the sum of the squares of the three
/// rank-2 diagonal projections equals an explicit 6x6 integer matrix, which
/// also decomposes through the vectorized identity; the identity is interior
/// to the PSD cone, so the boundary slice of the vectorized cone is not a
/// face.
pub fn case_svec_boundary() -> Result<CaseReport> {
    let mut report = CaseReport::new("svec_boundary_nonface");

    let diag3 = |d: [f64; 3]| SymMatrix::from_fn(3, |i, j| if i == j { d[i] } else { 0.0 });
    let boundary_parts = [
        diag3([1.0, 1.0, 0.0]),
        diag3([0.0, 1.0, 1.0]),
        diag3([1.0, 0.0, 1.0]),
    ];
    let mut m = SymMatrix::zeros(6);
    for part in &boundary_parts {
        m = m.add(&tensor_square(&svec(part)));
    }

    // Expected display: diagonal (2, 0, 2, 0, 0, 2) and unit entries at the
    // diagonal-pair slots, in svec index order (11, 12, 22, 13, 23, 33).
    let mut expected = SymMatrix::zeros(6);
    for (i, d) in [2.0, 0.0, 2.0, 0.0, 0.0, 2.0].iter().enumerate() {
        expected.set_sym(i, i, *d);
    }
    expected.set_sym(0, 2, 1.0);
    expected.set_sym(0, 5, 1.0);
    expected.set_sym(2, 5, 1.0);
    let entrywise_equal = m.sub(&expected).fro_norm() == 0.0;
    report.claim(
        "sum of boundary squares matches the 6x6 display entrywise",
        json!(expected.rows()),
        json!(m.rows()),
        entrywise_equal,
    );

    let four_parts = [
        diag3([1.0, 1.0, 1.0]),
        diag3([1.0, 0.0, 0.0]),
        diag3([0.0, 1.0, 0.0]),
        diag3([0.0, 0.0, 1.0]),
    ];
    let mut m4 = SymMatrix::zeros(6);
    for part in &four_parts {
        m4 = m4.add(&tensor_square(&svec(part)));
    }
    let alt_equal = m.sub(&m4).fro_norm() == 0.0;
    report.claim(
        "alternative four-term decomposition agrees",
        json!(true),
        json!(alt_equal),
        alt_equal,
    );

    let a = tensor_square(&svec(&diag3([1.0, 1.0, 1.0])));
    let rank_a = rank_of(&a, crate::DEFAULT_TOL);
    report.claim(
        "the vectorized identity square has rank 1",
        json!(1),
        json!(rank_a),
        rank_a == 1,
    );

    // The unique PSD generator de-vectorizes to the identity, which has
    // λ_min = 1 > 0 and therefore does not lie on the PSD boundary.
    let eig = sym_eigen(&a)?;
    let top = eig.eigenvectors.last().unwrap();
    let gen = scale_vec(top, eig.max().sqrt());
    let gen = if gen.iter().sum::<f64>() >= 0.0 {
        gen
    } else {
        scale_vec(&gen, -1.0)
    };
    let devec = svec_inverse(&gen)?;
    let lam_min = sym_eigen(&devec)?.min();
    report.claim(
        "the generator de-vectorizes to the identity with λ_min = 1",
        json!(1.0),
        json!(lam_min),
        (lam_min - 1.0).abs() <= 1e-9,
    );

    report.claim(
        "the boundary slice of the vectorized PSD cone is not a face",
        json!(true),
        json!(report.overall),
        report.overall,
    );

    Ok(report)
}

/// The polyhedral running example: `K = {x : x_2 >= 0, x_1 + x_2 >= 0}`,
/// generated by `(1, 0)` and `(-1, 1)`.
pub fn paper_polyhedral_cone() -> ConeSpec {
    ConeSpec::Polyhedral2 {
        g1: [1.0, 0.0],
        g2: [-1.0, 1.0],
    }
}

/// Runs the four cases with their canonical inputs.
pub fn run_all() -> Result<Vec<CaseReport>> {
    let mut e1 = vec![0.0; 2];
    e1[0] = 1.0;
    Ok(vec![
        case_nonface_product(3, &e1)?,
        exposed_ray_general(
            &SocVector::new(vec![1.0, 0.0])?,
            &paper_polyhedral_cone(),
        )?,
        exposed_ray_general(&SocVector::new(vec![0.0, 1.0, 0.0])?, &ConeSpec::Soc(3))?,
        case_svec_boundary()?,
    ])
}
