/// kcal/mol per Hartree.
pub const HARTREE_TO_KCAL_PER_MOL: f64 = 627.509474;

/// 1 kcal/mol expressed in Hartree.
pub const CHEMICAL_ACCURACY_HARTREE: f64 = 1.0 / HARTREE_TO_KCAL_PER_MOL;

pub fn hartree_to_kcal(e: f64) -> f64 {
    e * HARTREE_TO_KCAL_PER_MOL
}
