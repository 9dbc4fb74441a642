//! Reports over a seeded Ginibre ensemble, written as CSV.

use std::io::Write;

use bzinfo_core::states::random_density;
use bzinfo_core::{bz, BzReport, Family};

pub const COLUMNS: [&str; 11] = [
    "state_id",
    "purity",
    "C_direct",
    "C_closed",
    "V_direct",
    "V_closed",
    "I_direct",
    "I_closed",
    "U_direct",
    "U_closed",
    "max_abs_err",
];

/// State `i` is drawn with seed `seed + i`. `rank` defaults to full rank.
pub fn sweep(
    family: &Family,
    states: usize,
    rank: Option<usize>,
    seed: u64,
) -> bzinfo_core::Result<Vec<BzReport>> {
    let d = family.dim();
    let rank = rank.unwrap_or(d);
    (0..states)
        .map(|i| {
            let rho = random_density(d, rank, seed.wrapping_add(i as u64))?;
            bz::bz_report(family, &rho)
        })
        .collect()
}

pub fn write_csv<W: Write>(reports: &[BzReport], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(COLUMNS)?;
    for (id, r) in reports.iter().enumerate() {
        let fields = [
            r.purity,
            r.c_direct,
            r.c_closed,
            r.v_direct,
            r.v_closed,
            r.i_direct,
            r.i_closed,
            r.u_direct,
            r.u_closed,
            r.max_abs_discrepancy,
        ];
        let mut record = vec![id.to_string()];
        record.extend(fields.iter().map(|x| x.to_string()));
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}
