#pragma once

#include <stdexcept>
#include <string>

namespace iwn {

class error : public std::runtime_error {
public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

class invalid_interval : public error {
public:
  using error::error;
};

class division_by_interval_containing_zero : public error {
public:
  using error::error;
};

class duplicate_edge : public error {
public:
  using error::error;
};

class unknown_vertex : public error {
public:
  using error::error;
};

class missing_period : public error {
public:
  using error::error;
};

class source_equals_sink : public error {
public:
  using error::error;
};

class vertices_not_distinct : public error {
public:
  using error::error;
};

class negative_alpha : public error {
public:
  using error::error;
};

class budget_exceeded : public error {
public:
  using error::error;
};

class parse_error : public error {
public:
  using error::error;
};

}  // namespace iwn
