use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance on `alpha + beta + gamma = 1`.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-12;

/// Mixing weights `(alpha, beta, gamma)` of `H_L`, `H_M`, `H_R`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScheduleWeights {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl ScheduleWeights {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        let w = ScheduleWeights { alpha, beta, gamma };
        let in_unit = |v: f64| v.is_finite() && (-WEIGHT_SUM_TOLERANCE..=1.0 + WEIGHT_SUM_TOLERANCE).contains(&v);
        if !(in_unit(alpha) && in_unit(beta) && in_unit(gamma)) {
            return Err(Error::Range(format!("weights {w:?} must each lie in [0, 1]")));
        }
        if (alpha + beta + gamma - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(Error::Range(format!("weights {w:?} do not sum to 1")));
        }
        Ok(w)
    }

    pub fn left() -> Self {
        ScheduleWeights {
            alpha: 1.0,
            beta: 0.0,
            gamma: 0.0,
        }
    }

    pub fn middle() -> Self {
        ScheduleWeights {
            alpha: 0.0,
            beta: 1.0,
            gamma: 0.0,
        }
    }

    pub fn right() -> Self {
        ScheduleWeights {
            alpha: 0.0,
            beta: 0.0,
            gamma: 1.0,
        }
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.alpha, self.beta, self.gamma]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ScheduleShape {
    /// `H_L -> H_M` over the first half, `H_M -> H_R` over the second, both linear.
    PairwiseLinear,
    /// Weights held fixed for the whole drive.
    Constant(ScheduleWeights),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Schedule {
    t_final: f64,
    shape: ScheduleShape,
}

impl Schedule {
    pub fn new(t_final: f64, shape: ScheduleShape) -> Result<Self> {
        if !(t_final.is_finite() && t_final > 0.0) {
            return Err(Error::Range(format!("drive time {t_final} must be positive")));
        }
        Ok(Schedule { t_final, shape })
    }

    pub fn pairwise_linear(t_final: f64) -> Result<Self> {
        Schedule::new(t_final, ScheduleShape::PairwiseLinear)
    }

    pub fn t_final(&self) -> f64 {
        self.t_final
    }

    pub fn shape(&self) -> ScheduleShape {
        self.shape
    }

    /// Weights at time `t`; times overshooting `[0, t_f]` by rounding (1e-9 relative) are clamped.
    pub fn weights(&self, t: f64) -> Result<ScheduleWeights> {
        schedule_weights(t, self)
    }
}

pub fn schedule_weights(t: f64, schedule: &Schedule) -> Result<ScheduleWeights> {
    let tf = schedule.t_final;
    let slack = 1e-9 * tf.max(1.0);
    if !t.is_finite() || t < -slack || t > tf + slack {
        return Err(Error::Range(format!("time {t} outside [0, {tf}]")));
    }
    let t = t.clamp(0.0, tf);
    Ok(match schedule.shape {
        ScheduleShape::Constant(w) => w,
        ScheduleShape::PairwiseLinear => {
            let u = 2.0 * t / tf;
            if t <= 0.5 * tf {
                ScheduleWeights {
                    alpha: 1.0 - u,
                    beta: u,
                    gamma: 0.0,
                }
            } else {
                ScheduleWeights {
                    alpha: 0.0,
                    beta: 2.0 - u,
                    gamma: u - 1.0,
                }
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairwise_linear_landmarks() {
        let s = Schedule::pairwise_linear(4000.0).unwrap();
        assert_eq!(s.weights(0.0).unwrap(), ScheduleWeights::left());
        assert_eq!(s.weights(2000.0).unwrap(), ScheduleWeights::middle());
        assert_eq!(
            s.weights(3000.0).unwrap(),
            ScheduleWeights {
                alpha: 0.0,
                beta: 0.5,
                gamma: 0.5
            }
        );
        assert_eq!(s.weights(4000.0).unwrap(), ScheduleWeights::right());
    }

    #[test]
    fn out_of_range_times() {
        let s = Schedule::pairwise_linear(10.0).unwrap();
        assert!(matches!(s.weights(-0.1), Err(Error::Range(_))));
        assert!(matches!(s.weights(10.1), Err(Error::Range(_))));
        assert!(s.weights(10.0 + 1e-12).is_ok());
        assert!(Schedule::pairwise_linear(0.0).is_err());
    }

    #[test]
    fn weights_validation() {
        assert!(ScheduleWeights::new(0.5, 0.5, 0.0).is_ok());
        assert!(ScheduleWeights::new(0.5, 0.6, 0.0).is_err());
        assert!(ScheduleWeights::new(1.5, -0.5, 0.0).is_err());
    }
}
