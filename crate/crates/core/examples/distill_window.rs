//! The distillability window in one page: a fidelity just above 1/2 is
//! distillable at rest but not for a fast-moving observer.

use isodistill_core::{
    apply_boost, distill_threshold, ppt_verdict, werner_state, wigner_coefficient, BoostFrame,
    GaussianWavepacket, WernerParam,
};

fn main() -> isodistill_core::Result<()> {
    let packet = GaussianWavepacket::new(0.2, 1.0)?; // w/2m = 0.1
    let frame = BoostFrame::new(packet, 3.0)?; // rapidity 3
    let n = wigner_coefficient(&frame);

    let rest = werner_state(WernerParam::new(0.502)?);
    let boosted = apply_boost(&rest, n);

    assert!(ppt_verdict(&rest)?.distillable); // F > 1/2
    assert!(!ppt_verdict(&boosted)?.distillable); // F < N_z(n) by rapidity 3
    assert!(distill_threshold(n) > 0.502);

    println!(
        "F = 0.502: distillable at rest, threshold N_z = {:.9} at rapidity 3",
        distill_threshold(n)
    );
    Ok(())
}
