use std::io::Write;

use serde::ser::SerializeStruct;
use serde::Serializer;

use hypcm_core::CheckTolerance;

use super::CheckReport;
use crate::error::Result;

pub(crate) fn tolerance<S: Serializer>(t: &CheckTolerance, s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut st = s.serialize_struct("CheckTolerance", 2)?;
    st.serialize_field("abs_tol", &t.abs_tol)?;
    st.serialize_field("rel_tol", &t.rel_tol)?;
    st.end()
}

/// JSON array of reports.
pub fn write_json<W: Write>(reports: &[CheckReport], w: W) -> Result<()> {
    serde_json::to_writer_pretty(w, reports)?;
    Ok(())
}

/// CSV with columns `id,residual,pass`.
pub fn write_csv<W: Write>(reports: &[CheckReport], w: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["id", "residual", "pass"])?;
    for r in reports {
        out.write_record([r.id.name(), &format!("{:e}", r.max_rel_residual), if r.pass { "true" } else { "false" }])?;
    }
    out.flush()?;
    Ok(())
}
