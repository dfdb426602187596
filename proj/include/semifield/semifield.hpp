#ifndef SEMIFIELD_SEMIFIELD_HPP
#define SEMIFIELD_SEMIFIELD_HPP

#include "semifield/algebra.hpp"
#include "semifield/autgroup.hpp"
#include "semifield/catalog.hpp"
#include "semifield/classify.hpp"
#include "semifield/config.hpp"
#include "semifield/error.hpp"
#include "semifield/family.hpp"
#include "semifield/family_report.hpp"
#include "semifield/gf.hpp"
#include "semifield/linalg.hpp"
#include "semifield/maps.hpp"
#include "semifield/oracle.hpp"
#include "semifield/sandler.hpp"
#include "semifield/serialize.hpp"
#include "semifield/spec.hpp"
#include "semifield/verify.hpp"

#endif  // SEMIFIELD_SEMIFIELD_HPP
