use std::cmp::Ordering;

use crate::poly::{degrevlex_slices, Monomial, MonomialOrder};

/// Order on module monomials `m * e_i`.
///
/// Position over term: the component index is compared before the monomial,
/// and component 0 is the greatest. For an elimination base order the
/// elimination block is compared even before the position, so every module
/// term involving a block variable dominates every term that does not.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct ModuleOrder {
    pub base: MonomialOrder,
}

impl ModuleOrder {
    pub const POT_DEGREVLEX: ModuleOrder = ModuleOrder {
        base: MonomialOrder::DegRevLex,
    };

    pub fn elimination(block: usize) -> ModuleOrder {
        ModuleOrder {
            base: MonomialOrder::Elimination { block },
        }
    }

    pub fn compare(&self, pa: usize, ma: &Monomial, pb: usize, mb: &Monomial) -> Ordering {
        let block = self.base.block();
        let (ea, eb) = (ma.exponents(), mb.exponents());
        degrevlex_slices(&ea[..block], &eb[..block])
            .then_with(|| pb.cmp(&pa))
            .then_with(|| degrevlex_slices(&ea[block..], &eb[block..]))
    }
}
