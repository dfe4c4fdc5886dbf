//! Implementations of the CLI subcommands: each returns a JSON payload
//! and, for flat tables, CSV rows mirroring it.

use charsheaf::exactalg::cyclo::CycLaurent;
use charsheaf::exactalg::{ExtendedCharLabel, Partition, SnCharLabel};
use charsheaf::orbits::CyclicF;
use charsheaf::{fforacle, gggr, green, lseries, orbits, sheaves, springer};
use serde_json::{json, Value};

use crate::convert::{
    cyclaurent_json, fraction_json, int_polynomial_json, partition_json,
};

pub type CsvRows = Vec<Vec<String>>;

pub struct CommandOutput {
    pub payload: Value,
    pub csv: Option<CsvRows>,
}

impl CommandOutput {
    fn json_only(payload: Value) -> Self {
        CommandOutput { payload, csv: None }
    }
}

pub fn oracle_classes(n: u32, q: u32, cap: u64) -> Result<CommandOutput, charsheaf::Error> {
    let census = fforacle::conjugacy_classes_capped(n, q, cap)?;
    let mut rows: CsvRows = vec![vec![
        "representative".into(),
        "size".into(),
        "centralizer_order".into(),
    ]];
    let classes: Vec<Value> = census
        .classes
        .iter()
        .map(|c| {
            rows.push(vec![
                format!("{:?}", c.representative.e),
                c.size.to_string(),
                c.centralizer_order.to_string(),
            ]);
            json!({
                "representative": c.representative.e,
                "size": c.size,
                "centralizer_order": c.centralizer_order,
            })
        })
        .collect();
    Ok(CommandOutput {
        payload: json!({
            "group_order": census.group_order,
            "class_count": census.classes.len(),
            "classes": classes,
        }),
        csv: Some(rows),
    })
}

pub fn orbits_cmd(n: u32, mu: &Partition) -> Result<CommandOutput, charsheaf::Error> {
    if mu.size() != n {
        return Err(charsheaf::Error::SizeMismatch);
    }
    let wd = orbits::weighted_dynkin(mu);
    let psi = orbits::lagrangian_psi(mu);
    let dims = orbits::orbit_dims(mu);
    let levi = orbits::levi_of_n(mu);
    // component groups for a generic large p and a generic q = p
    let payload = json!({
        "mu": partition_json(mu),
        "weighted_dynkin": {"h": wd.h, "levels": wd.levels},
        "lagrangian_psi": psi.roots,
        "dims": {
            "dim_orbit": dims.dim_orbit,
            "codim": dims.codim,
            "dim_centralizer": dims.dim_centralizer,
        },
        "levi": {"blocks": levi.blocks, "dim_center": levi.dim_center},
    });
    Ok(CommandOutput::json_only(payload))
}

pub fn springer_cmd(n: u32, p: u32, only_d: Option<u32>) -> Result<CommandOutput, charsheaf::Error> {
    let mut rows: CsvRows = vec![vec![
        "d".into(),
        "eps_index".into(),
        "weyl_label".into(),
        "orbit".into(),
        "tau".into(),
        "b_iota_u".into(),
        "b0_u".into(),
    ]];
    let mut blocks_json = Vec::new();
    for b in springer::blocks(n, p) {
        if let Some(d) = only_d {
            if b.d != d {
                continue;
            }
        }
        let mut members = Vec::new();
        for mubar in Partition::all(n / b.d) {
            let iota = springer::springer_map(&b, &mubar);
            let bv = springer::b_values(&iota, &b)?;
            rows.push(vec![
                b.d.to_string(),
                b.eps_index.to_string(),
                format!("{mubar:?}"),
                format!("{:?}", iota.orbit),
                iota.tau.to_string(),
                bv.b_iota_u.to_string(),
                bv.b0_u.to_string(),
            ]);
            members.push(json!({
                "weyl_label": partition_json(&mubar),
                "orbit": partition_json(&iota.orbit),
                "tau": iota.tau,
                "b_iota_u": bv.b_iota_u,
                "b0_u": bv.b0_u,
            }));
        }
        blocks_json.push(json!({
            "d": b.d,
            "eps_index": b.eps_index,
            "n_prime": b.n_prime,
            "cuspidal_orbit": partition_json(&b.cuspidal_orbit),
            "weyl_degree": b.weyl_degree,
            "members": members,
        }));
    }
    Ok(CommandOutput {
        payload: json!({"blocks": blocks_json}),
        csv: Some(rows),
    })
}

pub fn green_kostka(lambda: &Partition, mu: &Partition) -> Result<CommandOutput, charsheaf::Error> {
    let k = green::kostka(lambda, mu)?;
    let rows = vec![
        vec!["degree".into(), "coefficient".into()],
        // one row per coefficient
    ];
    let mut rows = rows;
    for (i, &c) in k.coeffs.iter().enumerate() {
        rows.push(vec![i.to_string(), c.to_string()]);
    }
    Ok(CommandOutput {
        payload: json!({
            "lambda": partition_json(lambda),
            "mu": partition_json(mu),
            "coefficients": int_polynomial_json(&k),
        }),
        csv: Some(rows),
    })
}

fn find_block(n: u32, p: u32, d: u32, eps: Option<u32>) -> Result<springer::Block, charsheaf::Error> {
    springer::blocks(n, p)
        .into_iter()
        .find(|b| b.d == d && eps.map(|e| b.eps_index == e).unwrap_or(true))
        .ok_or(charsheaf::Error::InvalidLabel)
}

pub fn green_omega(
    n: u32,
    p: u32,
    d: u32,
    iota: &Partition,
    iota2: &Partition,
) -> Result<CommandOutput, charsheaf::Error> {
    let b = find_block(n, p, d, None)?;
    let i1 = springer::springer_map(&b, &iota.unscale(d)?);
    let i2 = springer::springer_map(&b, &iota2.unscale(d)?);
    let w = green::omega(&i1, &i2, &b)?;
    let x = green::x_inner(&i1, &i2, &b)?;
    Ok(CommandOutput::json_only(json!({
        "block": {"d": b.d, "eps_index": b.eps_index},
        "omega": cyclaurent_json(&w),
        "x_inner": fraction_json(&x),
    })))
}

#[allow(clippy::too_many_arguments)]
pub fn gggr_inner(
    n: u32,
    p: u32,
    d: u32,
    mu: &Partition,
    c: u32,
    c0: u32,
    regular: bool,
    iota_orbit: Option<&Partition>,
    zeta: &CycLaurent,
    q: u64,
) -> Result<CommandOutput, charsheaf::Error> {
    let b = find_block(n, p, d, None)?;
    let members = b.members();
    let mut values = Vec::new();
    for iota in &members {
        if let Some(want) = iota_orbit {
            if &iota.orbit != want {
                continue;
            }
        }
        let v = if regular {
            gggr::gggr_x_inner_regular(c, c0, iota, &b, zeta, q)?
        } else {
            gggr::gggr_x_inner(c, c0, mu, iota, &b, zeta, q)?
        };
        values.push(json!({
            "iota_orbit": partition_json(&iota.orbit),
            "tau": iota.tau,
            "value": cyclaurent_json(&v),
        }));
    }
    let coeffs = gggr::gggr_projection_coeffs(c, c0, mu, &b, zeta, q)?;
    let projection: Vec<Value> = coeffs
        .iter()
        .map(|(iota, v)| {
            json!({
                "iota_orbit": partition_json(&iota.orbit),
                "tau": iota.tau,
                "coefficient": cyclaurent_json(v),
            })
        })
        .collect();
    Ok(CommandOutput::json_only(json!({
        "block": {"d": b.d, "eps_index": b.eps_index},
        "mu_N": partition_json(mu),
        "c": c,
        "c0": c0,
        "inner_products": values,
        "projection_coefficients": projection,
    })))
}

pub fn lseries_classes(n: u32, q: u32) -> Result<CommandOutput, charsheaf::Error> {
    let classes = lseries::enumerate_semisimple_classes(n, q)?;
    let mut rows: CsvRows = vec![vec![
        "eigenvalues".into(),
        "w_shat".into(),
        "omega_order".into(),
    ]];
    let list: Vec<Value> = classes
        .iter()
        .map(|(label, stab)| {
            rows.push(vec![
                format!("{:?}", label.eigenvalues),
                format!("{:?}", stab.w_shat),
                stab.omega.order.to_string(),
            ]);
            json!({
                "modulus": label.modulus,
                "eigenvalue_exponents": label.eigenvalues,
                "w_shat_multiplicities": stab.w_shat,
                "omega_order": stab.omega.order,
                "omega_multiplier": stab.omega.multiplier,
            })
        })
        .collect();
    Ok(CommandOutput {
        payload: json!({"count": classes.len(), "classes": list}),
        csv: Some(rows),
    })
}

pub fn lseries_irr_count(n: u32, q: u32) -> Result<CommandOutput, charsheaf::Error> {
    let got = lseries::irr_count(n, q)?;
    Ok(CommandOutput::json_only(json!({"irr_count": got})))
}

pub fn almost_matrix(t: u32, q: u32, mu: Option<&Partition>) -> Result<CommandOutput, charsheaf::Error> {
    let ctx = match mu {
        Some(m) => charsheaf::orbits::zm1_quotient(m, t, q as u64)?,
        None => CyclicF::new(t, q as u64),
    };
    let m = charsheaf::almost::transform_matrix(&ctx);
    let entries: Vec<Vec<Value>> = m
        .entries
        .iter()
        .map(|row| row.iter().map(cyclaurent_json).collect())
        .collect();
    let mut rows: CsvRows = vec![vec!["row".into(), "col".into(), "entry".into()]];
    for (i, row) in m.entries.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            rows.push(vec![i.to_string(), j.to_string(), format!("{e:?}")]);
        }
    }
    Ok(CommandOutput {
        payload: json!({
            "size": m.entries.len(),
            "invariant_size": m.a,
            "rows": m.rows.iter().map(|x| json!({"chi": x.chi, "elt": x.elt})).collect::<Vec<_>>(),
            "cols": m.cols.iter().map(|y| json!({"chi": y.chi, "class": y.class})).collect::<Vec<_>>(),
            "entries": entries,
            "unitary": m.is_unitary(),
        }),
        csv: Some(rows),
    })
}

pub fn sheaves_census(n: u32, q: u32, p: u32) -> Result<CommandOutput, charsheaf::Error> {
    let census = sheaves::cuspidal_census(n, q as u64, p);
    let mut rows: CsvRows = vec![vec!["z".into(), "eps".into()]];
    let list: Vec<Value> = census
        .iter()
        .map(|c| {
            rows.push(vec![c.z.to_string(), c.eps.to_string()]);
            json!({"z": c.z, "eps": c.eps})
        })
        .collect();
    Ok(CommandOutput {
        payload: json!({"count": census.len(), "labels": list}),
        csv: Some(rows),
    })
}

#[allow(clippy::too_many_arguments)]
pub fn sheaves_scalar(
    n: u32,
    t: u32,
    d: u32,
    q: u32,
    e2: &Partition,
    twist: u32,
    eps: u32,
    c0: u32,
    zeta: &CycLaurent,
    sign: i8,
) -> Result<CommandOutput, charsheaf::Error> {
    let ctx = sheaves::endomorphism_data(n, t, d, q as u64)?;
    let label = ExtendedCharLabel::new(SnCharLabel::new(e2.clone()), ctx.factor_count, twist);
    let mu = e2.scale(t);
    let loc = sheaves::locate_ze(&label, &mu, &ctx)?;
    let eps1 = sheaves::eps1_pullback(eps, &mu, t, d)?;
    // eps(c_0) through the Abar-structure
    let abar = CyclicF::new(t, q as u64);
    if eps1 % (t / abar.invariant_size()) != 0 {
        return Err(charsheaf::Error::InvalidLabel);
    }
    let eps_c0 = abar.stable_char_on_coinvariants(eps1, c0 % abar.invariant_size());
    let record = sheaves::nu_scalar(zeta, &eps_c0, &CycLaurent::one(), &CycLaurent::one(), sign)?;
    Ok(CommandOutput::json_only(json!({
        "endo": {
            "factor_degree": ctx.factor_degree,
            "factor_count": ctx.factor_count,
            "omega_order": ctx.omega.order,
        },
        "location": {"x_e": loc.x_e, "z_e": loc.z_e},
        "eps1_index": eps1,
        "scalar_record": {
            "sign": record.sign,
            "zeta_inv": cyclaurent_json(&record.zeta_inv),
            "eps_c0_inv": cyclaurent_json(&record.eps_c0_inv),
            "alpha_e": cyclaurent_json(&record.alpha_e),
            "central": cyclaurent_json(&record.central),
            "product": cyclaurent_json(&record.product()),
        },
    })))
}

pub fn render_csv(rows: &CsvRows) -> String {
    let mut out = String::new();
    for row in rows {
        let quoted: Vec<String> = row
            .iter()
            .map(|f| {
                if f.contains(',') || f.contains('"') {
                    format!("\"{}\"", f.replace('"', "\"\""))
                } else {
                    f.clone()
                }
            })
            .collect();
        out.push_str(&quoted.join(","));
        out.push('\n');
    }
    out
}
