use crate::dsl::{parse_catalog, CatalogEntry};

/// The shipped catalog. The first block is the reference list; the second
/// adds rings that exercise the remaining expression forms.
pub const DEFAULT_CATALOG: &str = "\
# reference rings
Z2
Z3
Z4
Z6
Z8
Z9
GF(4)
GF(5)
GF(7)
GF(8)
GF(9)
Prod(Z2, Z3)
Prod(Z3, Z3)
Prod(Z2, Z2, Z3)
M(2, Z2)
M(2, Z3)
T(2, Z2)
T(2, Z3)
T(3, Z2)
PolyMod(Z2, 2)
PolyMod(Z2, 3)
PolyMod(Z3, 2)
Tskew(2, GF(4), alpha=frobenius)
TrivExt(Z2)
TrivExt(Z3)
TrivExt(Z4)
DT(Z2)
DT(Z3)
Ks(Z2, s=0)
Ks(Z2, s=1)
Ks(Z4, s=2)
FM(2, Z4, s=2)
GroupRing(Z2, C2)
GroupRing(Z2, C4)
GroupRing(Z2, C2xC2)
GroupRing(Z2, C3)
GroupRing(Z3, C2)
GroupRing(Z3, C3)
GroupRing(Z4, C2)
GroupRing(Z2, C8)

# further forms
GF(2, 4)
SkewPolyMod(GF(4), 2, alpha=frobenius)
TrivExt(Z2, 2)
MoritaTriv(Z2)
MoritaTriv(Z2, GF(4))
";

pub fn default_catalog() -> Vec<CatalogEntry> {
    parse_catalog(DEFAULT_CATALOG).expect("the shipped catalog parses")
}
