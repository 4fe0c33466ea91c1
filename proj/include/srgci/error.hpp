// Error codes shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace srgci {

enum class errc {
    vertex_out_of_range,
    uncovered_vertex,
    not_a_face,
    not_squarefree,
    not_degree_two,
    not_equigenerated,
    zero_ideal,
    unit_ideal,
    not_pure,
    positive_degree,
    outside_characterization,
    internal_disagreement,
    parse_error,
    infeasible,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::vertex_out_of_range: return "VertexOutOfRange";
        case errc::uncovered_vertex: return "UncoveredVertex";
        case errc::not_a_face: return "NotAFace";
        case errc::not_squarefree: return "NotSquarefree";
        case errc::not_degree_two: return "NotDegreeTwo";
        case errc::not_equigenerated: return "NotEquigenerated";
        case errc::zero_ideal: return "ZeroIdeal";
        case errc::unit_ideal: return "UnitIdeal";
        case errc::not_pure: return "NotPure";
        case errc::positive_degree: return "PositiveDegree";
        case errc::outside_characterization: return "OutsideCharacterization";
        case errc::internal_disagreement: return "InternalDisagreement";
        case errc::parse_error: return "ParseError";
        case errc::infeasible: return "Infeasible";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

}  // namespace srgci
