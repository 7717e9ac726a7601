#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace apsym {

class DiffPoly;

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

/// Operands carry different truncation orders (or component counts).
class OrderMismatch : public Error
{
  public:
	using Error::Error;
};

/// A differential polynomial is not a total x-derivative. The obstruction
/// is its Euler operator, one entry per component.
class NotExact : public Error
{
  public:
	NotExact(std::string const &what, std::vector<DiffPoly> obstruction);
	std::vector<DiffPoly> const &obstruction() const { return *obstruction_; }

  private:
	std::shared_ptr<std::vector<DiffPoly>> obstruction_;
};

/// A composition leaves the class of operators a*Dx^j + a*Dxi*b.
class ClosureError : public Error
{
  public:
	using Error::Error;
};

/// Euler equation E(T) = g has no polynomial solution.
class NotVariational : public Error
{
  public:
	using Error::Error;
};

/// No preimage of a characteristic under a Hamiltonian operator was found.
class NotInImage : public Error
{
  public:
	NotInImage(std::string const &what, std::vector<DiffPoly> obstruction);
	std::vector<DiffPoly> const &obstruction() const { return *obstruction_; }

  private:
	std::shared_ptr<std::vector<DiffPoly>> obstruction_;
};

class Unsupported : public Error
{
  public:
	using Error::Error;
};

/// Jet-order or size cap exceeded.
class ResourceError : public Error
{
  public:
	using Error::Error;
};

} // namespace apsym
