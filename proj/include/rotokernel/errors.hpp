#pragma once

#include <stdexcept>
#include <string>

namespace rotokernel {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidPolygon : public Error {
public:
    using Error::Error;
};

class DegenerateIntersection : public Error {
public:
    using Error::Error;
};

class HullsIntersect : public Error {
public:
    HullsIntersect() : Error("convex hulls intersect") {}
};

/// The clip that should produce a connected kernel produced several pieces.
class DisconnectedKernel : public Error {
public:
    explicit DisconnectedKernel(std::size_t components)
        : Error("kernel clip produced " + std::to_string(components) + " components"),
          components_(components) {}
    std::size_t components() const noexcept { return components_; }

private:
    std::size_t components_;
};

class NotOrthogonal : public Error {
public:
    explicit NotOrthogonal(std::size_t edge)
        : Error("edge " + std::to_string(edge) + " is neither horizontal nor vertical"), edge_(edge) {}
    std::size_t edge() const noexcept { return edge_; }

private:
    std::size_t edge_;
};

class TiedExtremities : public Error {
public:
    using Error::Error;
};

class PointOutside : public Error {
public:
    using Error::Error;
};

class GenerationFailed : public Error {
public:
    using Error::Error;
};

} // namespace rotokernel
