#ifndef WRT_ERRORS_HPP
#define WRT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wrt {

enum class errc {
    too_small,
    not_square_free,
    out_of_range,
    not_an_ideal,
    zero_element,
    not_in_ideal,
    not_primitive,
    not_good_basis,
    not_twistable,
    degenerate_basis,
    even_c,
    c_one,
    bad_input,
    internal,
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace wrt

#endif
