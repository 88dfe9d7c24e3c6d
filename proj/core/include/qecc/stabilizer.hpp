#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qecc/bitvec.hpp"
#include "qecc/pauli.hpp"

namespace qecc {

/// Anticommutation pattern of an error against the code's generators:
/// bit i is set iff the error anticommutes with generator i.
class Syndrome {
public:
    Syndrome() = default;
    explicit Syndrome(BitVector bits) : bits_(std::move(bits)) {}

    size_t size() const { return bits_.size(); }
    bool get(size_t i) const { return bits_.get(i); }
    bool is_zero() const { return !bits_.any(); }
    const BitVector& bits() const { return bits_; }
    std::string str() const { return bits_.str(); }

    bool operator==(const Syndrome& o) const { return bits_ == o.bits_; }
    struct Hash {
        size_t operator()(const Syndrome& s) const { return BitVector::Hash{}(s.bits_); }
    };

private:
    BitVector bits_;
};

/// A validated stabilizer code: commuting, independent, real-positive
/// generators, with a cached symplectic completion into logical X/Z pairs.
/// Immutable after construction; safe to share across threads.
class StabilizerCode {
public:
    /// Validate a generator list (nonempty, uniform qubit count). Throws
    /// std::invalid_argument naming the offending generators on a
    /// non-commuting pair, a dependent generator, or a nonzero phase.
    static StabilizerCode validate(std::vector<PauliOperator> generators);

    /// Same, but an empty list is allowed when the qubit count is given
    /// explicitly (the [[n,n]] code with no generators).
    static StabilizerCode validate(std::vector<PauliOperator> generators, size_t n);

    size_t num_qubits() const { return n_; }
    size_t num_logical() const { return n_ - generators_.size(); }  // k
    size_t num_generators() const { return generators_.size(); }

    const std::vector<PauliOperator>& generators() const { return generators_; }
    const std::vector<PauliOperator>& logical_x() const { return logical_x_; }
    const std::vector<PauliOperator>& logical_z() const { return logical_z_; }

    std::optional<int> known_distance() const { return known_distance_; }
    /// Returns a copy with the distance annotation set (codes stay immutable).
    StabilizerCode with_known_distance(int d) const;
    /// Returns a copy using the given logical pairs after checking they
    /// satisfy the pairing invariants.
    StabilizerCode with_logicals(std::vector<PauliOperator> lx,
                                 std::vector<PauliOperator> lz) const;

    /// True iff every generator is purely X-type or purely Z-type.
    bool is_css() const;

    Syndrome syndrome(const PauliOperator& e) const;

    /// Commutes with every generator (zero syndrome).
    bool in_normalizer(const PauliOperator& p) const;
    /// Signed group membership: the bits solve the GF(2) system over the
    /// generators and the phase matches the actual generator product.
    bool in_stabilizer(const PauliOperator& p) const;
    /// Membership of the (x|z) bits in the generator rowspace, sign ignored.
    bool in_stabilizer_up_to_phase(const PauliOperator& p) const;
    /// The signed group element with the same bits as p, if there is one.
    std::optional<PauliOperator> stabilizer_element_like(const PauliOperator& p) const;

    struct DistanceResult {
        std::optional<int> distance;  // nullopt: enumeration exhausted the cap
        int cap;
        bool exceeded_cap() const { return !distance.has_value(); }
    };
    /// Exhaustive minimum weight of a normalizer element outside S, searched
    /// in increasing weight up to weight_cap. For k = 0 codes this is the
    /// minimum weight of a nontrivial stabilizer element.
    DistanceResult distance(int weight_cap) const;

    /// True iff some nontrivial stabilizer element has weight < d.
    bool is_degenerate(int d) const;

    /// Exhaustively confirm every Pauli of weight <= d-1 is in S (up to
    /// phase) or has a nonzero syndrome.
    bool verify_detection(int d) const;

    /// A correction supported on the erased positions consistent with the
    /// syndrome. Throws std::runtime_error when no such correction exists.
    PauliOperator decode_erasure(const std::vector<size_t>& erased, const Syndrome& s) const;

    /// Minimum weight over the coset p·S (phases ignored). Requires
    /// n - k <= 20 so the group walk stays cheap.
    int min_weight_in_coset(const PauliOperator& p) const;

private:
    StabilizerCode() = default;

    size_t n_ = 0;
    std::vector<PauliOperator> generators_;
    std::vector<PauliOperator> logical_x_, logical_z_;
    std::optional<int> known_distance_;
    Gf2Basis row_basis_{0};  // echelon form of the generators' (x|z) rows

    void compute_logicals();
    void compute_logicals_css();
    void check_logical_invariants() const;
};

/// Symplectic (x|z) layout helpers shared by the completion routines.
BitVector pauli_to_symplectic(const PauliOperator& p);
PauliOperator pauli_from_symplectic(const BitVector& v, unsigned phase = 0);
bool symplectic_product(const BitVector& a, const BitVector& b);

/// .stab file format: UTF-8 text, '#' comment lines, one Pauli per line.
std::vector<PauliOperator> read_stab_file(const std::string& path);
void write_stab_file(const std::string& path, const std::vector<PauliOperator>& generators,
                     const std::string& header_comment = "");

}  // namespace qecc
