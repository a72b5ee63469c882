#include "confract/specfun.hpp"

namespace confract {

template double gamma<double>(double);
template double bessel_i<double>(double, double);
template double bessel_i_scaled<double>(double, double);

}  // namespace confract
