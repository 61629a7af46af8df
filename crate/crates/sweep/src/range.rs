use std::fmt;
use std::str::FromStr;

/// Inclusive linear grid written as `lo:hi:n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridRange {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
}

impl GridRange {
    pub fn new(lo: f64, hi: f64, n: usize) -> Result<Self, String> {
        if !(lo.is_finite() && hi.is_finite()) {
            return Err(format!("range bounds must be finite, got {lo}:{hi}"));
        }
        if n == 0 {
            return Err("range needs at least one point".into());
        }
        if n > 1 && !(hi > lo) {
            return Err(format!("range {lo}:{hi}:{n} needs hi > lo"));
        }
        Ok(Self { lo, hi, n })
    }

    pub fn single(x: f64) -> Self {
        Self { lo: x, hi: x, n: 1 }
    }

    pub fn values(&self) -> Vec<f64> {
        if self.n == 1 {
            return vec![self.lo];
        }
        let last = (self.n - 1) as f64;
        (0..self.n)
            .map(|i| if i + 1 == self.n { self.hi } else { self.lo + (self.hi - self.lo) * i as f64 / last })
            .collect()
    }
}

impl FromStr for GridRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let [lo, hi, n] = parts.as_slice() else {
            return Err(format!("expected lo:hi:n, got '{s}'"));
        };
        let num = |x: &str| x.trim().parse::<f64>().map_err(|e| format!("bad number '{x}' in '{s}': {e}"));
        let n = n.trim().parse::<usize>().map_err(|e| format!("bad point count in '{s}': {e}"))?;
        Self::new(num(lo)?, num(hi)?, n)
    }
}

impl fmt::Display for GridRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.lo, self.hi, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_spans_inclusively() {
        let r: GridRange = "0:1:5".parse().unwrap();
        assert_eq!(r.values(), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        let single: GridRange = "3:3:1".parse().unwrap();
        assert_eq!(single.values(), vec![3.0]);
        assert_eq!(r.to_string().parse::<GridRange>().unwrap(), r);
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["1:2", "a:2:3", "1:2:0", "2:1:4", "1:1:3", "1:inf:2"] {
            assert!(bad.parse::<GridRange>().is_err(), "{bad}");
        }
    }
}
