#include "vk/error.hpp"

namespace vk {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::composition: return "composition";
    case ErrorKind::unknown_object: return "unknown-object";
    case ErrorKind::component: return "component";
    case ErrorKind::relation_shape: return "relation-shape";
    case ErrorKind::total_disconnection: return "total-disconnection";
    case ErrorKind::connectivity: return "connectivity";
    case ErrorKind::basepoint: return "basepoint";
    case ErrorKind::name: return "name";
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::closure: return "closure";
    case ErrorKind::disjointness: return "disjointness";
    case ErrorKind::membership: return "membership";
    case ErrorKind::shape: return "shape";
    case ErrorKind::generation_failure: return "generation-failure";
    case ErrorKind::pipeline: return "pipeline";
    case ErrorKind::parse: return "parse";
    case ErrorKind::schema: return "schema";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + " error: " + message), kind_(kind), detail_(message) {}

}  // namespace vk
