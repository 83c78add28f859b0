#pragma once

#include <stdexcept>
#include <string>

namespace scdraw {

enum class errc {
    embedding_invalid,
    no_small_face,
    unknown_face,
    no_canonical_order,
    not_three_connected,
    not_planar,
    outer_face_too_large,
    non_integer_intersection,
    internal_contour_violation,
    not_liftable,
    domain_error,
    size_too_small,
    parse_error,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::embedding_invalid: return "EmbeddingInvalid";
        case errc::no_small_face: return "NoSmallFace";
        case errc::unknown_face: return "UnknownFace";
        case errc::no_canonical_order: return "NoCanonicalOrder";
        case errc::not_three_connected: return "NotThreeConnected";
        case errc::not_planar: return "NotPlanar";
        case errc::outer_face_too_large: return "OuterFaceTooLarge";
        case errc::non_integer_intersection: return "NonIntegerIntersection";
        case errc::internal_contour_violation: return "InternalContourViolation";
        case errc::not_liftable: return "NotLiftable";
        case errc::domain_error: return "DomainError";
        case errc::size_too_small: return "SizeTooSmall";
        case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

}  // namespace scdraw
