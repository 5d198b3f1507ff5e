#pragma once

#include "homalg/totalization.hpp"

namespace homalg {

/// Two-sided homotopy inverse of a chain map, extracted from a contraction
/// of its mapping cone. The witnesses are exact:
///     inv o f - id_src = boundary(to_src)
///     f o inv - id_tgt = boundary(to_tgt)
struct HomotopyInverse {
    ChainMap inv;
    Homotopy to_src;
    Homotopy to_tgt;
};

/// Empty iff the cone of f is not contractible, i.e. f is not a homotopy
/// equivalence. When the cone contraction exists the inverse is read off
/// its blocks; the two witnesses are then solved for and certified.
std::optional<HomotopyInverse> homotopy_inverse(const ChainMap& f);

/// Carries one bounded complex of x-members over to the y side together
/// with the comparison map into the result. The cone of into_image is
/// left acyclic against y, which pins the image down up to homotopy.
struct CoresolvedComplex {
    Complex image;
    ChainMap into_image;
};

/// Session for moving complexes back and forth between the two sides of a
/// balanced pair. The forward direction coresolves each term: it runs the
/// resolving tower over the opposite algebra against the dualized y
/// generators and dualizes back. The backward direction resolves complexes
/// of y-members by x-members directly. Both directions memoize their
/// towers, so every choice is made once per session and reused.
struct EquivSession {
    SubcatSpec x;
    SubcatSpec y;
    AlgebraRef alg;
    AlgebraRef op;
    ResolveSession forward;  // over op, generators = dualized y
    ResolveSession back;     // over alg, generators = x
};

/// Width bounds every per-term resolution on both sides. Throws bad_input
/// on an empty side, mismatched base algebras, or negative width.
EquivSession make_equiv_session(const SubcatSpec& x, const SubcatSpec& y, int w);

/// Moves a complex of x-members to the y side. Complexes of members of
/// both sides come back unchanged with the identity comparison map.
/// Throws bad_input when a term fails x-membership, check_failure when a
/// term does not coresolve within the session width.
CoresolvedComplex coresolve(EquivSession& s, const Complex& c);

/// For r : a -> b with a a complex of x-members and b a complex of
/// y-members, produces R : coresolve(a).image -> b with
/// R o into_image = r exactly. This is the dual of lifting through the
/// resolving augmentation, computed over the opposite algebra.
ChainMap factor_through_coresolution(EquivSession& s, const ChainMap& r);

/// Image of f : c -> c2 between coresolved complexes: map o into_c =
/// into_c2 o f holds exactly, so the attached witness homotopy is zero.
/// Kept explicit because images are only well defined up to homotopy.
struct TransportedMap {
    ChainMap map;
    Homotopy witness;
};

TransportedMap transport_map(EquivSession& s, const ChainMap& f);

/// One corpus object's worth of equivalence evidence. quasi_iso_ok
/// rechecks the memoized comparison map; inverse_ok records whether the
/// round trip produced a certified two-sided homotopy inverse.
struct EquivWitness {
    std::string object;
    bool quasi_iso_ok = false;
    bool inverse_ok = false;
};

struct EquivReport {
    std::vector<EquivWitness> units;
    std::vector<EquivWitness> counits;
    bool all_ok = false;
};

/// For every x-side complex c: coresolve it, resolve the image back, and
/// certify c is homotopy equivalent to the round trip. For every y-side
/// complex d: resolve it, coresolve the resolution, and certify the round
/// trip lands back at d. Failures are report entries, never throws.
EquivReport verify_equivalence(EquivSession& s, const std::vector<Complex>& x_side,
                               const std::vector<Complex>& y_side);

}  // namespace homalg
