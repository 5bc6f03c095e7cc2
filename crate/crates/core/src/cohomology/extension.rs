use super::cocycle::Cocycle;
use crate::error::{Error, Result};
use crate::group::{quotient_group, GroupRef, Quotient, Subgroup};

/// Generator of a cyclic group with the smallest index, and the
/// discrete log table `z^k ↦ k` on its elements.
fn cyclic_log(z: &Subgroup) -> Result<(usize, Vec<Option<u64>>)> {
    let g = z.parent();
    let order = z.order();
    let gen = z
        .elements()
        .iter()
        .copied()
        .find(|&x| g.element_order(x) as usize == order)
        .ok_or(Error::NotCyclic)?;
    let mut log = vec![None; g.order()];
    let mut y = 0;
    for k in 0..order as u64 {
        log[y] = Some(k);
        y = g.mul(y, gen);
    }
    Ok((gen, log))
}

fn check_central(z: &Subgroup) -> Result<()> {
    let g = z.parent();
    let whole = Subgroup::whole(g);
    if !z.centralizes(&whole) {
        return Err(Error::NotCentral);
    }
    Ok(())
}

/// Cocycle of `E/Z` from the section `Zx ↦ min(Zx)`:
/// `α(x,y) = s(x)s(y)s(xy)⁻¹` read as a power of the smallest-index
/// generator of `Z`. The modulus is `|Z|`.
pub fn cocycle_from_extension(e: &GroupRef, z: &Subgroup) -> Result<(Quotient, Cocycle)> {
    check_central(z)?;
    let (_, log) = cyclic_log(z)?;
    let q = quotient_group(e, z)?;
    let k = q.group.order();
    let mut table = vec![0u32; k * k];
    for a in 0..k {
        for b in 0..k {
            let s = e.mul(q.section[a], q.section[b]);
            let t = q.section[q.group.mul(a, b)];
            let zval = e.mul(s, e.inv(t));
            table[a * k + b] = log[zval].ok_or(Error::NotCentral)? as u32;
        }
    }
    let c = Cocycle::from_table(&q.group, z.order() as u64, table)?;
    Ok((q, c))
}

/// Cocycle on `g` from a surjection `proj: E → g` with central cyclic
/// kernel, using the section `x ↦ min proj⁻¹(x)`.
pub fn cocycle_from_cover(e: &GroupRef, g: &GroupRef, proj: &[usize]) -> Result<Cocycle> {
    let n = g.order();
    if proj.len() != e.order() || proj[0] != 0 {
        return Err(Error::InvalidTable("projection must fix the identity".into()));
    }
    for x in 0..e.order() {
        for y in 0..e.order() {
            if proj[e.mul(x, y)] != g.mul(proj[x], proj[y]) {
                return Err(Error::InvalidTable("projection is not a homomorphism".into()));
            }
        }
    }
    let kernel: Vec<usize> = (0..e.order()).filter(|&x| proj[x] == 0).collect();
    let z = Subgroup::from_elements(e, &kernel)?;
    check_central(&z)?;
    let (_, log) = cyclic_log(&z)?;
    let mut section = vec![usize::MAX; n];
    for x in 0..e.order() {
        if section[proj[x]] == usize::MAX {
            section[proj[x]] = x;
        }
    }
    if section.contains(&usize::MAX) {
        return Err(Error::InvalidTable("projection is not onto".into()));
    }
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            let s = e.mul(section[a], section[b]);
            let t = section[g.mul(a, b)];
            let zval = e.mul(s, e.inv(t));
            table[a * n + b] = log[zval].ok_or(Error::NotCentral)? as u32;
        }
    }
    Cocycle::from_table(g, z.order() as u64, table)
}
