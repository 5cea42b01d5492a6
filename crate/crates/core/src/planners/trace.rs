use serde::Serialize;
use std::cell::Cell;
use std::time::Instant;

/// Monotonic time source, in seconds since the run started.
pub trait Clock {
    fn elapsed(&self) -> f64;
}

/// Real time measured from construction.
#[derive(Debug, Clone)]
pub struct WallClock(Instant);

impl WallClock {
    pub fn start() -> WallClock {
        WallClock(Instant::now())
    }
}

impl Default for WallClock {
    fn default() -> Self {
        WallClock::start()
    }
}

impl Clock for WallClock {
    fn elapsed(&self) -> f64 {
        self.0.elapsed().as_secs_f64()
    }
}

/// Deterministic clock that advances by a fixed tick on every read.
#[derive(Debug, Clone)]
pub struct TickClock {
    now: Cell<f64>,
    tick: f64,
}

impl TickClock {
    pub fn new(tick: f64) -> TickClock {
        TickClock { now: Cell::new(0.0), tick }
    }
}

impl Clock for TickClock {
    fn elapsed(&self) -> f64 {
        let t = self.now.get();
        self.now.set(t + self.tick);
        t
    }
}

/// Primitive-operation counters of one run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counters {
    pub samples: u64,
    pub lp_calls: u64,
    pub cc_calls: u64,
    pub delta_hat: u64,
    pub vertices: u64,
    pub edges: u64,
}

/// Improvement of the best solution cost.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TraceEvent {
    pub elapsed: f64,
    pub iteration: u64,
    pub cost: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    Solved,
    NoSolution,
}

/// Anytime record of one seeded run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnytimeTrace {
    pub events: Vec<TraceEvent>,
    pub counters: Counters,
    pub iterations: u64,
    pub elapsed: f64,
    pub status: Status,
}

impl AnytimeTrace {
    pub fn best_cost(&self) -> Option<f64> {
        self.events.last().map(|e| e.cost)
    }

    /// Time of the first event with cost strictly below `threshold`.
    pub fn time_to_cost_below(&self, threshold: f64) -> Option<f64> {
        self.events.iter().find(|e| e.cost < threshold).map(|e| e.elapsed)
    }

    /// CSV body: header and one line per event.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("elapsed_s,iteration,best_cost\n");
        for e in &self.events {
            s.push_str(&format!("{},{},{}\n", e.elapsed, e.iteration, e.cost));
        }
        s
    }

    /// `# key value` footer lines with counters and status.
    pub fn footer(&self) -> String {
        let c = &self.counters;
        format!(
            "# status {}\n# iterations {}\n# samples {}\n# lp_calls {}\n# cc_calls {}\n# delta_hat {}\n# vertices {}\n# edges {}\n",
            match self.status {
                Status::Solved => "solved",
                Status::NoSolution => "no_solution",
            },
            self.iterations,
            c.samples,
            c.lp_calls,
            c.cc_calls,
            c.delta_hat,
            c.vertices,
            c.edges
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tick_clock_advances() {
        let c = TickClock::new(0.5);
        assert_eq!(c.elapsed(), 0.0);
        assert_eq!(c.elapsed(), 0.5);
    }
}
