use std::io::Write;

use super::engine::{DensitySample, TrajectoryEvent, TrajectorySink};
use crate::error::Result;

/// Writes `time event_type vertex [target]` lines: `recover v` or
/// `infect source target`. The first write error is kept and reported by
/// [`TextTrajectory::finish`].
pub struct TextTrajectory<W: Write> {
    out: W,
    error: Option<std::io::Error>,
}

impl<W: Write> TextTrajectory<W> {
    pub fn new(out: W) -> Self {
        Self { out, error: None }
    }

    pub fn finish(mut self) -> Result<W> {
        if let Some(e) = self.error.take() {
            return Err(e.into());
        }
        self.out.flush()?;
        Ok(self.out)
    }
}

impl<W: Write> TrajectorySink for TextTrajectory<W> {
    fn record(&mut self, time: f64, event: TrajectoryEvent) {
        if self.error.is_some() {
            return;
        }
        let res = match event {
            TrajectoryEvent::Recover { vertex } => writeln!(self.out, "{time:?} recover {vertex}"),
            TrajectoryEvent::Infect { source, target } => {
                writeln!(self.out, "{time:?} infect {source} {target}")
            }
        };
        if let Err(e) = res {
            self.error = Some(e);
        }
    }
}

/// CSV with header `t,count,density`; reals use round-trip formatting.
pub fn write_density_csv<W: Write>(out: W, samples: &[DensitySample]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["t", "count", "density"])?;
    for s in samples {
        w.write_record([format!("{:?}", s.time), s.count.to_string(), format!("{:?}", s.density)])?;
    }
    w.flush()?;
    Ok(())
}
