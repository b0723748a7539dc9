#ifndef CHENLEGENDRE_PATH_HPP
#define CHENLEGENDRE_PATH_HPP

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "chenlegendre/errors.hpp"

namespace chl {

using Cplx = std::complex<double>;

struct LineSegment {
    Cplx from, to;
};

/// Circular arc center + radius * exp(i*angle), angle from angle_from to
/// angle_to (either orientation; a full turn is a 2*pi span).
struct ArcSegment {
    Cplx center;
    double radius = 0.0;
    double angle_from = 0.0;
    double angle_to = 0.0;
};

using Segment = std::variant<LineSegment, ArcSegment>;

struct TangentialBasePoint {
    Cplx point;
    Cplx tangent; // nonzero
};

/// Piecewise smooth path in C \ {0,1}, parametrized on [0,1] with each
/// segment on an equal parameter interval. Endpoints may sit on the punctures
/// {0,1} when the corresponding tangential datum is present; the stored start
/// tangent u satisfies lim_{t->0+} d(gamma)/dt = u and the stored end tangent
/// v satisfies lim_{t->1-} d(gamma)/dt = -v.
class Path {
  public:
    Path() = default;
    explicit Path(std::vector<Segment> segments,
                  std::optional<Cplx> start_tangent = std::nullopt,
                  std::optional<Cplx> end_tangent = std::nullopt);

    static Path line(Cplx from, Cplx to);
    static Path constant(Cplx at);
    /// The straight path [0,1] with unit tangential data at both punctures.
    static Path dch();
    /// Counterclockwise circle of radius 1/2 around 0, based at 1/2.
    static Path loop_around_zero();
    /// Counterclockwise circle of radius 1/2 around 1, based at 1/2.
    static Path loop_around_one();
    /// Look up a built-in by name ("dch"); ParseError otherwise.
    static Path named(const std::string& name);

    const std::vector<Segment>& segments() const { return segments_; }
    std::size_t segment_count() const { return segments_.size(); }
    const std::optional<Cplx>& start_tangent() const { return start_tangent_; }
    const std::optional<Cplx>& end_tangent() const { return end_tangent_; }

    Cplx start() const;
    Cplx end() const;
    Cplx point(double t) const;
    /// 1 - point(t), computed per segment from the stored data so there is no
    /// cancellation when the path runs close to lambda = 1.
    Cplx one_minus_point(double t) const;
    Cplx velocity(double t) const;
    /// Parameter values of interior segment joints (strictly inside (0,1)).
    std::vector<double> joint_parameters() const;

    bool cuspidal_start() const { return start_tangent_.has_value(); }
    bool cuspidal_end() const { return end_tangent_.has_value(); }
    bool cuspidal() const { return cuspidal_start() || cuspidal_end(); }

    /// Sub-path on [a, b] (0 <= a < b <= 1) re-parametrized to [0,1];
    /// tangential data is dropped (the new endpoints are treated as given).
    Path subpath(double a, double b) const;

    /// Sub-path on [eps, 1-eps] re-parametrized to [0,1]; endpoints become
    /// interior, so tangential data is dropped. eps = 0 returns the path
    /// unchanged (tangential data included).
    Path shrink(double eps) const;

    Path reversed() const;
    friend Path concat(const Path& a, const Path& b);

    /// Checks segment chaining, tangential data consistency against the
    /// terminal parametrization derivatives, and that endpoints on {0,1}
    /// carry tangential data. Throws DomainError on violation.
    void validate() const;

  private:
    std::vector<Segment> segments_;
    std::optional<Cplx> start_tangent_;
    std::optional<Cplx> end_tangent_;
};

nlohmann::json path_to_json(const Path& p);
Path path_from_json(const nlohmann::json& j);

} // namespace chl

#endif
