//! Catalog of rings: rational double points as hypersurfaces, rational
//! triple points and the two worked examples as determinantal rings.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ideal::{minors, IdealHandle, PresentedQuotient};
use crate::polyring::{parse_poly, Polynomial, Ring, RingRef};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum FamilyTag {
    RdpA(u32),
    RdpD(u32),
    RdpE6,
    RdpE7,
    RdpE8,
    A(u32, u32, u32),
    B(u32, u32),
    C(u32, u32),
    D(u32),
    F(u32),
    H(u32),
    Gamma1,
    Gamma2,
    Gamma3,
    Ex52,
    Ex53,
}

impl FamilyTag {
    pub fn validate(&self) -> Result<()> {
        use FamilyTag::*;
        let ok = match *self {
            RdpA(n) => n >= 1,
            RdpD(n) => n >= 4,
            A(l, m, n) => l <= m && m <= n,
            B(_, n) => n >= 3,
            C(_, n) => n >= 4,
            H(n) => n >= 5,
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::OutOfRange(self.to_string()))
        }
    }

    pub fn is_rdp(&self) -> bool {
        matches!(self, FamilyTag::RdpA(_) | FamilyTag::RdpD(_) | FamilyTag::RdpE6 | FamilyTag::RdpE7 | FamilyTag::RdpE8)
    }

    /// Rational triple point families.
    pub fn is_rtp(&self) -> bool {
        use FamilyTag::*;
        matches!(self, A(..) | B(..) | C(..) | D(_) | F(_) | H(_) | Gamma1 | Gamma2 | Gamma3)
    }

    pub fn cm_type(&self) -> u32 {
        if self.is_rdp() {
            1
        } else if *self == FamilyTag::Ex53 {
            3
        } else {
            2
        }
    }

    /// Multiplicity the catalog declares for the family.
    pub fn declared_multiplicity(&self) -> u32 {
        if self.is_rdp() {
            2
        } else if *self == FamilyTag::Ex53 {
            4
        } else {
            3
        }
    }

    /// The `k` with `n = 2k-1` or `n = 2k` for `B`, and `n = 3k-1, 3k, 3k+1`
    /// for `H`.
    pub fn k_param(&self) -> Option<u32> {
        match *self {
            FamilyTag::B(_, n) => Some(n.div_ceil(2)),
            FamilyTag::H(n) => Some((n + 1) / 3),
            _ => None,
        }
    }

    /// Published reduction `Q_i` of `(x, y, z, t^i)`, as generator strings.
    pub fn seed_reduction(&self, i: u32) -> Option<[String; 2]> {
        use FamilyTag::*;
        let ti = format!("t^{i}");
        match self {
            A(..) => Some([ti, "x + y + z".into()]),
            B(..) | C(..) | D(_) | F(_) => Some([ti, "x + z".into()]),
            H(_) | Gamma1 | Gamma2 | Gamma3 => Some([ti, "z".into()]),
            Ex52 => Some(["x".into(), ti]),
            _ => None,
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilyTag::*;
        match self {
            RdpA(n) => write!(f, "RDP-A:{n}"),
            RdpD(n) => write!(f, "RDP-D:{n}"),
            RdpE6 => write!(f, "RDP-E6"),
            RdpE7 => write!(f, "RDP-E7"),
            RdpE8 => write!(f, "RDP-E8"),
            A(l, m, n) => write!(f, "A:{l},{m},{n}"),
            B(m, n) => write!(f, "B:{m},{n}"),
            C(m, n) => write!(f, "C:{m},{n}"),
            D(n) => write!(f, "D:{n}"),
            F(n) => write!(f, "F:{n}"),
            H(n) => write!(f, "H:{n}"),
            Gamma1 => write!(f, "GAMMA1"),
            Gamma2 => write!(f, "GAMMA2"),
            Gamma3 => write!(f, "GAMMA3"),
            Ex52 => write!(f, "EX-5.2"),
            Ex53 => write!(f, "EX-5.3"),
        }
    }
}

fn parse_params(s: &str, want: usize, tag: &str) -> Result<Vec<u32>> {
    let v: std::result::Result<Vec<u32>, _> = s.split(',').map(|p| p.trim().parse::<u32>()).collect();
    match v {
        Ok(v) if v.len() == want => Ok(v),
        _ => Err(Error::Parse { pos: 0, msg: format!("tag {tag} expects {want} integer parameter(s)") }),
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    /// `A:1,2,3`, `B:m,n`, `C:m,n`, `D:n`, `F:n`, `H:n`, `RDP-A:n`,
    /// `RDP-D:n`, `RDP-E6|7|8`, `GAMMA1|2|3` (or `Γ1`), `EX-5.2`, `EX-5.3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, rest) = match s.split_once(':') {
            Some((h, r)) => (h.trim().to_ascii_uppercase(), Some(r)),
            None => (s.to_ascii_uppercase(), None),
        };
        let head = head.replace('Γ', "GAMMA");
        let p = |n: usize| parse_params(rest.unwrap_or(""), n, &head);
        let tag = match head.as_str() {
            "RDP-A" => FamilyTag::RdpA(p(1)?[0]),
            "RDP-D" => FamilyTag::RdpD(p(1)?[0]),
            "RDP-E6" => FamilyTag::RdpE6,
            "RDP-E7" => FamilyTag::RdpE7,
            "RDP-E8" => FamilyTag::RdpE8,
            "A" => {
                let v = p(3)?;
                FamilyTag::A(v[0], v[1], v[2])
            }
            "B" => {
                let v = p(2)?;
                FamilyTag::B(v[0], v[1])
            }
            "C" => {
                let v = p(2)?;
                FamilyTag::C(v[0], v[1])
            }
            "D" => FamilyTag::D(p(1)?[0]),
            "F" => FamilyTag::F(p(1)?[0]),
            "H" => FamilyTag::H(p(1)?[0]),
            "GAMMA1" => FamilyTag::Gamma1,
            "GAMMA2" => FamilyTag::Gamma2,
            "GAMMA3" => FamilyTag::Gamma3,
            "EX-5.2" => FamilyTag::Ex52,
            "EX-5.3" => FamilyTag::Ex53,
            _ => return Err(Error::Parse { pos: 0, msg: format!("unknown family tag '{s}'") }),
        };
        if rest.is_some() && !matches!(head.as_str(), "RDP-A" | "RDP-D" | "A" | "B" | "C" | "D" | "F" | "H") {
            return Err(Error::Parse { pos: 0, msg: format!("tag {head} takes no parameters") });
        }
        tag.validate()?;
        Ok(tag)
    }
}

/// One catalog ring.
#[derive(Clone, Debug)]
pub struct RingPresentation {
    pub tag: FamilyTag,
    pub quotient: PresentedQuotient,
    pub matrix: Option<Vec<Vec<Polynomial>>>,
    pub cm_type: u32,
}

pub fn rtp_ring() -> RingRef {
    Ring::grevlex(&["x", "y", "z", "t"])
}

pub fn rdp_ring() -> RingRef {
    Ring::grevlex(&["x", "y", "z"])
}

pub fn ex53_ring() -> RingRef {
    Ring::grevlex(&["z1", "z2", "z3", "z4", "z5"])
}

fn parse_matrix(ring: &RingRef, rows: &[&[String]]) -> Result<Vec<Vec<Polynomial>>> {
    rows.iter().map(|r| r.iter().map(|e| parse_poly(ring, e)).collect()).collect()
}

/// The Hilbert–Burch matrix of a determinantal family.
pub fn family_matrix(tag: FamilyTag) -> Option<Vec<[String; 3]>> {
    use FamilyTag::*;
    let s = |v: &str| v.to_string();
    let rows = match tag {
        A(l, m, n) => vec![
            [s("x"), format!("t^{}", m + 1), format!("t^{} + z", n + 1)],
            [format!("t^{}", l + 1), s("y"), s("z")],
        ],
        B(m, n) => {
            let k = tag.k_param().unwrap();
            if n % 2 == 1 {
                vec![[s("x"), s("y"), format!("t^{k} + z*t")], [format!("t^{}", m + 1), s("z"), s("y")]]
            } else {
                vec![[s("x"), s("y"), s("z*t")], [format!("t^{}", m + 1), s("z"), format!("y + t^{k}")]]
            }
        }
        C(m, n) => vec![
            [s("x"), s("y"), format!("t^2 + z^{}", n - 1)],
            [format!("t^{}", m + 1), s("z"), s("y")],
        ],
        D(n) => vec![[s("x"), s("y"), s("z^2")], [format!("t^{}", n + 1), s("z"), s("y + t^2")]],
        F(n) => vec![[s("x"), s("y"), s("t^3 + z^2")], [format!("t^{}", n + 1), s("z"), s("y")]],
        H(n) => {
            let k = tag.k_param().unwrap();
            match n % 3 {
                2 => vec![[s("x"), s("y"), format!("z*t + t^{k}")], [s("y"), s("z"), s("x")]],
                0 => vec![[s("x"), s("y"), s("z*t")], [s("y"), s("z"), format!("x + t^{k}")]],
                _ => vec![[s("x"), s("y"), s("z*t")], [format!("y + t^{k}"), s("z"), s("x")]],
            }
        }
        Gamma1 => vec![[s("x"), s("y"), s("t^2")], [s("y"), s("z"), s("x + z^2")]],
        Gamma2 => vec![[s("x"), s("y"), s("z^2")], [s("y"), s("z"), s("x + t^2")]],
        Gamma3 => vec![[s("x"), s("y"), s("t^2 + z^3")], [s("y"), s("z"), s("x")]],
        Ex52 => vec![[s("x"), s("y"), s("z")], [s("y"), s("z"), s("x^2 - t^3")]],
        _ => return None,
    };
    Some(rows)
}

/// Generators of the defining ideal, written out by hand for each family.
pub fn printed_generators(tag: FamilyTag) -> Option<Vec<String>> {
    use FamilyTag::*;
    let g = match tag {
        A(l, m, n) => vec![
            format!("x*y - t^{}", l + m + 2),
            // Not t^{n+2}: the 2x2 minor and the
            // worked A(1,2,3) example both give t^{l+n+2}.
            format!("x*z - t^{} - z*t^{}", l + n + 2, l + 1),
            format!("y*z + y*t^{} - z*t^{}", n + 1, m + 1),
        ],
        B(m, n) => {
            let k = tag.k_param().unwrap();
            if n % 2 == 1 {
                vec![
                    format!("x*z - y*t^{}", m + 1),
                    format!("x*y - t^{} - z*t^{}", m + k + 1, m + 2),
                    format!("y^2 - z*t^{k} - z^2*t"),
                ]
            } else {
                vec![
                    format!("x*z - y*t^{}", m + 1),
                    format!("x*y + x*t^{k} - z*t^{}", m + 2),
                    format!("y^2 + y*t^{k} - z^2*t"),
                ]
            }
        }
        C(m, n) => vec![
            format!("x*z - y*t^{}", m + 1),
            format!("x*y - t^{} - z^{}*t^{}", m + 3, n - 1, m + 1),
            format!("y^2 - z*t^2 - z^{n}"),
        ],
        D(n) => vec![
            format!("x*z - y*t^{}", n + 1),
            format!("x*y + x*t^2 - z^2*t^{}", n + 1),
            "y^2 + y*t^2 - z^3".into(),
        ],
        F(n) => vec![
            format!("x*z - y*t^{}", n + 1),
            format!("x*y - t^{} - z^2*t^{}", n + 4, n + 1),
            "y^2 - z*t^3 - z^3".into(),
        ],
        H(n) => {
            let k = tag.k_param().unwrap();
            match n % 3 {
                2 => vec![format!("x^2 - y*z*t - y*t^{k}"), format!("x*y - z^2*t - z*t^{k}"), "y^2 - x*z".into()],
                0 => vec![format!("x^2 + x*t^{k} - y*z*t"), format!("x*y - z^2*t + y*t^{k}"), "y^2 - x*z".into()],
                _ => vec![
                    format!("x^2 - y*z*t - z*t^{}", k + 1),
                    "x*y - z^2*t".into(),
                    format!("y^2 - x*z + y*t^{k}"),
                ],
            }
        }
        Gamma1 => vec!["x^2 - y*t^2 + x*z^2".into(), "x*y - z*t^2 + y*z^2".into(), "y^2 - x*z".into()],
        Gamma2 => vec!["x^2 - y*z^2 + x*t^2".into(), "x*y - z^3 + y*t^2".into(), "y^2 - x*z".into()],
        Gamma3 => vec!["x^2 - y*t^2 - y*z^3".into(), "x*y - z*t^2 - z^4".into(), "y^2 - x*z".into()],
        RdpA(n) => vec![format!("z^2 + x^2 + y^{}", n + 1)],
        RdpD(n) => vec![format!("z^2 + x^2*y + y^{}", n - 1)],
        RdpE6 => vec!["z^2 + x^3 + y^4".into()],
        RdpE7 => vec!["z^2 + x^3 + x*y^3".into()],
        RdpE8 => vec!["z^2 + x^3 + y^5".into()],
        Ex52 | Ex53 => return None,
    };
    Some(g)
}

pub fn instantiate(tag: FamilyTag) -> Result<RingPresentation> {
    tag.validate()?;
    if tag.is_rdp() {
        let ring = rdp_ring();
        let eq = parse_poly(&ring, &printed_generators(tag).unwrap()[0])?;
        let q = PresentedQuotient::new(IdealHandle::new(&ring, vec![eq])?)?;
        return Ok(RingPresentation { tag, quotient: q, matrix: None, cm_type: 1 });
    }
    if tag == FamilyTag::Ex53 {
        let ring = ex53_ring();
        let rows: Vec<Vec<String>> = vec![
            ["z1", "z4", "z2", "z3^2"].iter().map(|s| s.to_string()).collect(),
            ["z2", "z3", "z4", "z5"].iter().map(|s| s.to_string()).collect(),
        ];
        let m = parse_matrix(&ring, &[&rows[0], &rows[1]])?;
        let a = minors(&ring, &m, 2)?;
        let q = PresentedQuotient::new(a)?;
        return Ok(RingPresentation { tag, quotient: q, matrix: Some(m), cm_type: 3 });
    }
    let ring = rtp_ring();
    let rows = family_matrix(tag).expect("determinantal family");
    let m = parse_matrix(&ring, &[&rows[0][..], &rows[1][..]])?;
    let a = minors(&ring, &m, 2)?;
    let q = PresentedQuotient::new(a)?;
    Ok(RingPresentation { tag, quotient: q, matrix: Some(m), cm_type: 2 })
}

impl RingPresentation {
    pub fn ring(&self) -> &RingRef {
        self.quotient.ring()
    }

    pub fn defining(&self) -> &IdealHandle {
        self.quotient.defining()
    }

    /// `I_1(M) + a`; only for 2x3 matrices.
    pub fn trace_ideal(&self) -> Result<IdealHandle> {
        let m = match (&self.matrix, self.cm_type) {
            (Some(m), 2) if m.len() == 2 && m[0].len() == 3 => m,
            _ => {
                return Err(Error::Unsupported(format!(
                    "trace ideal needs a 2x3 presentation (CM type 2); {} has CM type {}",
                    self.tag, self.cm_type
                )))
            }
        };
        let entries = minors(self.ring(), m, 1)?;
        self.quotient.extend(&entries)
    }

    /// `ℓ(A/tr)`.
    pub fn residue(&self) -> Result<usize> {
        let tr = self.trace_ideal()?;
        self.quotient.local_length(&tr)
    }

    /// Every variable lies in the trace ideal.
    pub fn nearly_gorenstein(&self) -> Result<bool> {
        let tr = self.trace_ideal()?;
        for v in 0..self.ring().nvars() {
            if !tr.member(&Polynomial::var(self.ring(), v))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `(x, y, z, t^i)` style candidate: all variables but the last, plus
    /// the last to the `i`.
    pub fn pattern_ideal(&self, i: u32) -> Result<IdealHandle> {
        let ring = self.ring();
        let n = ring.nvars();
        let mut gens: Vec<Polynomial> = (0..n - 1).map(|v| Polynomial::var(ring, v)).collect();
        gens.push(Polynomial::var(ring, n - 1).pow(i));
        IdealHandle::new(ring, gens)
    }

    pub fn ideal_from_strings<S: AsRef<str>>(&self, gens: &[S]) -> Result<IdealHandle> {
        let ring = self.ring();
        let polys = gens.iter().map(|g| parse_poly(ring, g.as_ref())).collect::<Result<Vec<_>>>()?;
        IdealHandle::new(ring, polys)
    }
}
