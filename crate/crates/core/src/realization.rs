//! Exact piecewise-linear realization of a tag.
//!
//! The canonical orbit of `w` places point `i` at `+1/i` when letter `i` is `L`
//! and at `-1/i` when it is `R`, ending at the fixed point `0`. Interpolating
//! linearly between consecutive orbit points gives a continuous self-map of
//! `[m, M]`; [`enumerate_tags`] then computes every tag that map admits.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::pattern_set::PatternSet;
use crate::rational::{
    int, midpoint, parse_rational, rat, to_display_string, to_fraction_string, ParseRationalError,
    Rational,
};
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizationError {
    #[error("orbit points {0} and {1} coincide")]
    DegenerateOrbit(String, String),
    #[error("invalid orbit for {word}: {reason}")]
    InvalidOrbit { word: Word, reason: String },
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("{x} is outside the domain [{lo}, {hi}]")]
    OutOfDomain { x: String, lo: String, hi: String },
    #[error("point {x} did not reach a fixed point within {max_steps} steps")]
    NotEventuallyFixed { x: String, max_steps: usize },
    #[error(transparent)]
    Rational(#[from] ParseRationalError),
    #[error("malformed map JSON: {0}")]
    Json(String),
}

/// An orbit `x_1 -> x_2 -> ... -> x_{n+1} = 0` realizing a tag of length `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalOrbit {
    word: Word,
    points: Vec<Rational>,
}

impl CanonicalOrbit {
    /// Accepts any orbit that ends at `0` and respects the word's sign and
    /// movement rules. Coincident points are caught by [`interpolate`].
    pub fn from_points(word: Word, points: Vec<Rational>) -> Result<Self, RealizationError> {
        let invalid = |reason: String| RealizationError::InvalidOrbit {
            word: word.clone(),
            reason,
        };
        if points.len() != word.len() + 1 {
            return Err(invalid(format!(
                "expected {} points, got {}",
                word.len() + 1,
                points.len()
            )));
        }
        if !points[word.len()].is_zero() {
            return Err(invalid("last point must be the fixed point 0".into()));
        }
        for (i, letter) in word.letters().iter().enumerate() {
            let (x, next) = (&points[i], &points[i + 1]);
            let ok = match letter {
                Letter::L => x.is_positive() && next < x,
                Letter::R => x.is_negative() && next > x,
            };
            if !ok {
                return Err(invalid(format!(
                    "point {} = {} violates the sign or movement rule for {letter}",
                    i + 1,
                    to_display_string(x)
                )));
            }
        }
        Ok(CanonicalOrbit { word, points })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn points(&self) -> &[Rational] {
        &self.points
    }
}

pub fn canonical_orbit(w: &Word) -> CanonicalOrbit {
    let mut points: Vec<Rational> = w
        .letters()
        .iter()
        .zip(1i64..)
        .map(|(letter, i)| match letter {
            Letter::L => rat(1, i),
            Letter::R => rat(-1, i),
        })
        .collect();
    points.push(int(0));
    CanonicalOrbit {
        word: w.clone(),
        points,
    }
}

/// A continuous piecewise-linear self-map of `[m, M]`, linear between
/// consecutive breakpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlMap {
    xs: Vec<Rational>,
    ys: Vec<Rational>,
}

impl PlMap {
    pub fn new(breakpoints: Vec<(Rational, Rational)>) -> Result<PlMap, RealizationError> {
        if breakpoints.is_empty() {
            return Err(RealizationError::InvalidMap("no breakpoints".into()));
        }
        let (xs, ys): (Vec<_>, Vec<_>) = breakpoints.into_iter().unzip();
        if let Some(pair) = xs.windows(2).find(|p| p[0] >= p[1]) {
            return Err(RealizationError::InvalidMap(format!(
                "breakpoints not strictly increasing at {}",
                to_display_string(&pair[1])
            )));
        }
        let (lo, hi) = (&xs[0], &xs[xs.len() - 1]);
        if let Some(y) = ys.iter().find(|y| *y < lo || *y > hi) {
            return Err(RealizationError::InvalidMap(format!(
                "value {} leaves the domain [{}, {}]",
                to_display_string(y),
                to_display_string(lo),
                to_display_string(hi)
            )));
        }
        Ok(PlMap { xs, ys })
    }

    pub fn domain(&self) -> (&Rational, &Rational) {
        (&self.xs[0], &self.xs[self.xs.len() - 1])
    }

    pub fn breakpoints(&self) -> impl Iterator<Item = (&Rational, &Rational)> {
        self.xs.iter().zip(&self.ys)
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational, RealizationError> {
        let (lo, hi) = self.domain();
        if x < lo || x > hi {
            return Err(RealizationError::OutOfDomain {
                x: to_display_string(x),
                lo: to_display_string(lo),
                hi: to_display_string(hi),
            });
        }
        Ok(match self.xs.binary_search(x) {
            Ok(i) => self.ys[i].clone(),
            Err(i) => self.interpolate_on(i - 1, x),
        })
    }

    fn interpolate_on(&self, seg: usize, x: &Rational) -> Rational {
        let (x0, x1) = (&self.xs[seg], &self.xs[seg + 1]);
        let (y0, y1) = (&self.ys[seg], &self.ys[seg + 1]);
        y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    }

    /// Every `x` with `f(x) = c`, except inside constant segments (whose
    /// endpoints are breakpoints already).
    pub fn preimages(&self, c: &Rational) -> Vec<Rational> {
        let mut out = Vec::new();
        for seg in 0..self.xs.len().saturating_sub(1) {
            let (y0, y1) = (&self.ys[seg], &self.ys[seg + 1]);
            if y0 == y1 {
                continue;
            }
            let (lo, hi) = if y0 < y1 { (y0, y1) } else { (y1, y0) };
            if lo <= c && c <= hi {
                let (x0, x1) = (&self.xs[seg], &self.xs[seg + 1]);
                out.push(x0 + (c - y0) * (x1 - x0) / (y1 - y0));
            }
        }
        out
    }

    /// Exact image of the closed interval `[a, b]`.
    pub fn image(&self, a: &Rational, b: &Rational) -> Result<(Rational, Rational), RealizationError> {
        let fa = self.eval(a)?;
        let fb = self.eval(b)?;
        let (mut lo, mut hi) = if fa <= fb { (fa, fb) } else { (fb, fa) };
        for (x, y) in self.breakpoints() {
            if a < x && x < b {
                if *y < lo {
                    lo = y.clone();
                }
                if *y > hi {
                    hi = y.clone();
                }
            }
        }
        Ok((lo, hi))
    }

    pub fn to_json(&self) -> String {
        let (lo, hi) = self.domain();
        let value = MapJson {
            domain: [to_fraction_string(lo), to_fraction_string(hi)],
            breakpoints: self
                .breakpoints()
                .map(|(x, y)| [to_fraction_string(x), to_fraction_string(y)])
                .collect(),
        };
        serde_json::to_string(&value).expect("map JSON serializes")
    }

    pub fn from_json(text: &str) -> Result<PlMap, RealizationError> {
        let value: MapJson =
            serde_json::from_str(text).map_err(|e| RealizationError::Json(e.to_string()))?;
        let breakpoints = value
            .breakpoints
            .iter()
            .map(|[x, y]| Ok((parse_rational(x)?, parse_rational(y)?)))
            .collect::<Result<Vec<_>, RealizationError>>()?;
        let map = PlMap::new(breakpoints)?;
        let (lo, hi) = map.domain();
        if parse_rational(&value.domain[0])? != *lo || parse_rational(&value.domain[1])? != *hi {
            return Err(RealizationError::Json(
                "domain does not match the first and last breakpoints".into(),
            ));
        }
        Ok(map)
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct MapJson {
    domain: [String; 2],
    breakpoints: Vec<[String; 2]>,
}

/// The interpolant through the orbit: breakpoints are the orbit points in
/// increasing order, each mapped to its successor, `0` mapped to itself.
pub fn interpolate(orbit: &CanonicalOrbit) -> Result<PlMap, RealizationError> {
    let pts = &orbit.points;
    let mut pairs: Vec<(Rational, Rational)> = pts
        .iter()
        .enumerate()
        .map(|(i, x)| (x.clone(), pts.get(i + 1).cloned().unwrap_or_else(|| x.clone())))
        .collect();
    pairs.sort_by(|a, b| a.0.cmp(&b.0));
    if let Some(p) = pairs.windows(2).find(|p| p[0].0 == p[1].0) {
        return Err(RealizationError::DegenerateOrbit(
            to_display_string(&p[0].0),
            to_display_string(&p[1].0),
        ));
    }
    PlMap::new(pairs)
}

pub fn canonical_map(w: &Word) -> PlMap {
    interpolate(&canonical_orbit(w)).expect("canonical orbit points are distinct")
}

pub fn eval(map: &PlMap, x: &Rational) -> Result<Rational, RealizationError> {
    map.eval(x)
}

/// Follows the orbit of `x`, emitting `L` for each leftward and `R` for each
/// rightward move, until it lands on a fixed point.
pub fn tag_of_point(map: &PlMap, x: &Rational, max_steps: usize) -> Result<Word, RealizationError> {
    let mut letters = Vec::new();
    let mut y = x.clone();
    loop {
        let next = map.eval(&y)?;
        if next == y {
            return Ok(Word::new(letters));
        }
        if letters.len() == max_steps {
            return Err(RealizationError::NotEventuallyFixed {
                x: to_display_string(x),
                max_steps,
            });
        }
        letters.push(if next < y { Letter::L } else { Letter::R });
        y = next;
    }
}

/// A maximal run of the domain on which the tag is constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TagBand {
    pub lo: Rational,
    pub hi: Rational,
    pub lo_closed: bool,
    pub hi_closed: bool,
    pub tag: Word,
}

impl TagBand {
    pub fn contains(&self, x: &Rational) -> bool {
        let above = if self.lo_closed { *x >= self.lo } else { *x > self.lo };
        let below = if self.hi_closed { *x <= self.hi } else { *x < self.hi };
        above && below
    }
}

impl fmt::Display for TagBand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{{{}}}", to_display_string(&self.lo))?;
        } else {
            write!(
                f,
                "{}{}, {}{}",
                if self.lo_closed { '[' } else { '(' },
                to_display_string(&self.lo),
                to_display_string(&self.hi),
                if self.hi_closed { ']' } else { ')' }
            )?;
        }
        write!(f, ": {}", self.tag)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TagEnumeration {
    pub tags: PatternSet,
    /// Sorted critical points; tags are constant on the open cells between them.
    pub partition_points: Vec<Rational>,
    pub depth_bound: usize,
    pub bands: Vec<TagBand>,
}

/// Breakpoints together with all their preimages under `f^k`, `k = 1..=depth`.
fn pullback_partition(map: &PlMap, depth: usize) -> BTreeSet<Rational> {
    let mut points: BTreeSet<Rational> = map.xs.iter().cloned().collect();
    let mut layer: Vec<Rational> = map.xs.clone();
    for _ in 0..depth {
        let mut next = Vec::new();
        for c in &layer {
            for p in map.preimages(c) {
                if points.insert(p.clone()) {
                    next.push(p);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layer = next;
    }
    points
}

/// The tag of every point of the domain, up to orbits of length `depth`.
///
/// On each cell of the pullback partition every iterate `f^k`, `k <= depth`,
/// is affine, so `f^{k+1} - f^k` changes sign at most once there; those
/// crossings are added as partition points too. The tag is then constant on
/// every open cell and one representative per cell suffices.
pub fn enumerate_tags(map: &PlMap, depth: usize) -> Result<TagEnumeration, RealizationError> {
    let mut points = pullback_partition(map, depth);
    let sorted: Vec<Rational> = points.iter().cloned().collect();
    for cell in sorted.windows(2) {
        let (a, b) = (&cell[0], &cell[1]);
        let mut fa = a.clone();
        let mut fb = b.clone();
        for _ in 0..depth {
            let fa_next = map.eval(&fa)?;
            let fb_next = map.eval(&fb)?;
            let ga = &fa_next - &fa;
            let gb = &fb_next - &fb;
            if ga.is_positive() && gb.is_negative() || ga.is_negative() && gb.is_positive() {
                points.insert(a + &ga * (b - a) / (&ga - &gb));
            }
            fa = fa_next;
            fb = fb_next;
        }
    }
    let partition_points: Vec<Rational> = points.into_iter().collect();

    // Alternating point, cell, point, ... left to right.
    let mut pieces: Vec<(Rational, Rational, Word)> = Vec::with_capacity(2 * partition_points.len());
    for (i, p) in partition_points.iter().enumerate() {
        if i > 0 {
            let q = &partition_points[i - 1];
            pieces.push((q.clone(), p.clone(), tag_of_point(map, &midpoint(q, p), depth)?));
        }
        pieces.push((p.clone(), p.clone(), tag_of_point(map, p, depth)?));
    }

    let mut bands: Vec<TagBand> = Vec::new();
    for (lo, hi, tag) in pieces {
        let is_point = lo == hi;
        match bands.last_mut() {
            Some(band) if band.tag == tag => {
                band.hi = hi;
                band.hi_closed = is_point;
            }
            _ => bands.push(TagBand {
                lo,
                hi,
                lo_closed: is_point,
                hi_closed: is_point,
                tag,
            }),
        }
    }

    Ok(TagEnumeration {
        tags: bands.iter().map(|b| b.tag.clone()).collect(),
        partition_points,
        depth_bound: depth,
        bands,
    })
}

/// `true` iff `f^n([m, M])` is the single point `0`.
pub fn verify_collapse(map: &PlMap, n: usize) -> bool {
    let (lo, hi) = map.domain();
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    for _ in 0..n {
        match map.image(&lo, &hi) {
            Ok((a, b)) => {
                lo = a;
                hi = b;
            }
            Err(_) => return false,
        }
    }
    lo.is_zero() && hi.is_zero()
}

pub fn forced_set_via_realization(w: &Word) -> Result<PatternSet, RealizationError> {
    Ok(enumerate_tags(&canonical_map(w), w.len())?.tags)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern_set::pattern_set;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn rllrl_map() -> PlMap {
        canonical_map(&w("RLLRL"))
    }

    #[test]
    fn canonical_orbit_examples() {
        assert_eq!(
            canonical_orbit(&w("RLLRL")).points(),
            &[rat(-1, 1), rat(1, 2), rat(1, 3), rat(-1, 4), rat(1, 5), int(0)]
        );
        assert_eq!(canonical_orbit(&w("e")).points(), &[int(0)]);
        assert_eq!(canonical_orbit(&w("L")).points(), &[int(1), int(0)]);
    }

    #[test]
    fn canonical_orbit_satisfies_its_own_invariants() {
        for x in Word::all_up_to(8) {
            let orbit = canonical_orbit(&x);
            CanonicalOrbit::from_points(x.clone(), orbit.points().to_vec()).unwrap();
        }
    }

    #[test]
    fn from_points_rejects_bad_orbits() {
        assert!(CanonicalOrbit::from_points(w("L"), vec![int(1)]).is_err());
        assert!(CanonicalOrbit::from_points(w("L"), vec![int(1), int(1)]).is_err());
        assert!(CanonicalOrbit::from_points(w("L"), vec![int(-1), int(0)]).is_err());
        // R at a positive point moving right.
        assert!(CanonicalOrbit::from_points(w("RL"), vec![rat(1, 2), int(1), int(0)]).is_err());
    }

    #[test]
    fn interpolate_examples() {
        let m = canonical_map(&w("L"));
        let bps: Vec<_> = m.breakpoints().map(|(x, y)| (x.clone(), y.clone())).collect();
        assert_eq!(bps, vec![(int(0), int(0)), (int(1), int(0))]);
        assert_eq!(m.eval(&rat(1, 2)).unwrap(), int(0));

        let m = canonical_map(&w("LL"));
        let bps: Vec<_> = m.breakpoints().map(|(x, y)| (x.clone(), y.clone())).collect();
        assert_eq!(
            bps,
            vec![(int(0), int(0)), (rat(1, 2), int(0)), (int(1), rat(1, 2))]
        );

        assert_eq!(rllrl_map().eval(&rat(-1, 4)).unwrap(), rat(1, 5));
    }

    #[test]
    fn interpolate_rejects_coincident_points() {
        // L then R from 1 to 1/2 back to ... an orbit revisiting 1/2.
        let orbit = CanonicalOrbit {
            word: w("LRL"),
            points: vec![int(1), rat(-1, 2), rat(1, 1), int(0)],
        };
        assert!(matches!(
            interpolate(&orbit),
            Err(RealizationError::DegenerateOrbit(..))
        ));
    }

    /// The five affine pieces written out for the RLLRL example.
    fn explicit_formula(x: &Rational) -> Rational {
        if *x <= rat(-1, 4) {
            rat(1, 10) - rat(2, 5) * x
        } else if *x <= int(0) {
            rat(-4, 5) * x
        } else if *x <= rat(1, 5) {
            int(0)
        } else if *x <= rat(1, 3) {
            rat(3, 8) - rat(15, 8) * x
        } else {
            rat(7, 2) * x - rat(17, 12)
        }
    }

    #[test]
    fn interpolant_matches_printed_formula() {
        let m = rllrl_map();
        for k in -60..=30 {
            let x = rat(k, 60);
            assert_eq!(m.eval(&x).unwrap(), explicit_formula(&x), "at {x}");
        }
    }

    #[test]
    fn eval_examples_and_domain() {
        let m = rllrl_map();
        assert_eq!(m.eval(&rat(1, 3)).unwrap(), rat(-1, 4));
        assert_eq!(m.eval(&int(0)).unwrap(), int(0));
        assert_eq!(m.eval(&rat(1, 10)).unwrap(), int(0));
        assert!(matches!(
            m.eval(&rat(-2, 1)),
            Err(RealizationError::OutOfDomain { .. })
        ));
        assert!(m.eval(&rat(3, 5)).is_err());
    }

    #[test]
    fn tag_of_point_examples() {
        let m = rllrl_map();
        assert_eq!(tag_of_point(&m, &int(-1), 10).unwrap(), w("RLLRL"));
        assert_eq!(tag_of_point(&m, &int(0), 0).unwrap(), w("e"));
        assert_eq!(tag_of_point(&m, &rat(-19, 21), 10).unwrap(), w("RLL"));
        assert!(matches!(
            tag_of_point(&m, &int(-1), 4),
            Err(RealizationError::NotEventuallyFixed { .. })
        ));
    }

    #[test]
    fn tag_of_point_on_non_ef_map() {
        // x -> 1 - x on [0, 1] swaps 0 and 1 forever.
        let m = PlMap::new(vec![(int(0), int(1)), (int(1), int(0))]).unwrap();
        assert!(matches!(
            tag_of_point(&m, &int(0), 20),
            Err(RealizationError::NotEventuallyFixed { max_steps: 20, .. })
        ));
        assert_eq!(tag_of_point(&m, &rat(1, 2), 0).unwrap(), w("e"));
    }

    #[test]
    fn enumerate_examples() {
        let e = enumerate_tags(&rllrl_map(), 5).unwrap();
        assert_eq!(
            e.tags,
            pattern_set(&["RLLRL", "RLRL", "RLL", "LLRL", "LRL", "RL", "LL", "L", "e"])
        );
        assert!(e.tags.iter().all(|t| t.len() <= e.depth_bound));

        let e = enumerate_tags(&canonical_map(&w("L")), 1).unwrap();
        assert_eq!(e.tags, pattern_set(&["L", "e"]));
        let bands: Vec<String> = e.bands.iter().map(|b| b.to_string()).collect();
        assert_eq!(bands, ["{0}: e", "(0, 1]: L"]);

        let e = enumerate_tags(&canonical_map(&w("e")), 0).unwrap();
        assert_eq!(e.tags, pattern_set(&["e"]));
    }

    #[test]
    fn bands_on_left_part() {
        let e = enumerate_tags(&rllrl_map(), 5).unwrap();
        let left: Vec<&Rational> = e
            .partition_points
            .iter()
            .filter(|p| **p >= int(-1) && **p < rat(-1, 4))
            .collect();
        assert!(left.contains(&&rat(-19, 21)));
        assert!(left.contains(&&rat(-16, 21)));
        let first = &e.bands[0];
        assert_eq!(first.to_string(), "[-1, -19/21): RLLRL");
        let second = &e.bands[1];
        assert_eq!((second.lo.clone(), second.lo_closed), (rat(-19, 21), true));
        assert_eq!((second.hi.clone(), second.hi_closed), (rat(-16, 21), false));
        assert_eq!(second.tag, w("RLL"));
    }

    #[test]
    fn bands_cover_domain_and_agree_with_pointwise_tags() {
        let m = canonical_map(&w("LRRLR"));
        let e = enumerate_tags(&m, 5).unwrap();
        for k in -100..=100 {
            let x = rat(k, 100);
            let owners: Vec<&TagBand> = e.bands.iter().filter(|b| b.contains(&x)).collect();
            if x < *m.domain().0 || x > *m.domain().1 {
                assert!(owners.is_empty());
                continue;
            }
            assert_eq!(owners.len(), 1, "{x}");
            assert_eq!(owners[0].tag, tag_of_point(&m, &x, 5).unwrap());
        }
    }

    #[test]
    fn collapse_examples() {
        assert!(verify_collapse(&rllrl_map(), 5));
        assert!(!verify_collapse(&rllrl_map(), 1));
        assert!(!verify_collapse(&rllrl_map(), 4));
        assert!(verify_collapse(&canonical_map(&w("e")), 0));
    }

    #[test]
    fn forced_set_examples() {
        assert_eq!(
            forced_set_via_realization(&w("RLLRL")).unwrap(),
            crate::language::construct_language(&w("RLLRL"))
        );
        assert_eq!(forced_set_via_realization(&w("e")).unwrap(), pattern_set(&["e"]));
        assert_eq!(
            forced_set_via_realization(&w("LL")).unwrap(),
            pattern_set(&["LL", "L", "e"])
        );
    }

    #[test]
    fn map_validation() {
        assert!(PlMap::new(vec![]).is_err());
        assert!(PlMap::new(vec![(int(0), int(0)), (int(0), int(0))]).is_err());
        assert!(PlMap::new(vec![(int(0), int(0)), (int(1), int(2))]).is_err());
    }

    #[test]
    fn json_export_and_import() {
        let m = canonical_map(&w("RL"));
        let text = m.to_json();
        assert_eq!(
            text,
            r#"{"domain":["-1/1","1/2"],"breakpoints":[["-1/1","1/2"],["0/1","0/1"],["1/2","0/1"]]}"#
        );
        assert_eq!(PlMap::from_json(&text).unwrap(), m);
        assert!(PlMap::from_json(r#"{"domain":["0/1","2/1"],"breakpoints":[["0/1","0/1"],["1/1","0/1"]]}"#).is_err());
        assert!(PlMap::from_json("{}").is_err());
    }
}
