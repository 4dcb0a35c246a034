#pragma once

#include <string>

namespace arthur {

enum class Family { Sp, SOodd, SOeven, U };
enum class Form { split, qs, inner };

std::string to_string(Form f);

// A classical group up to pure inner form. dim() is the dimension of the
// underlying space: Sp(2n), SO(2n+1), SO(2n), U(N).
class GroupForm {
 public:
  GroupForm() = default;

  static GroupForm sp(int dim);
  static GroupForm so(int dim, Form form);
  static GroupForm u(int dim, Form form);
  static GroupForm make(Family family, int dim, Form form);

  Family family() const { return family_; }
  Form form() const { return form_; }
  int dim() const { return dim_; }
  int n() const { return dim_ / 2; }
  bool unitary() const { return family_ == Family::U; }

  int witt_rank() const;
  GroupForm quasi_split() const;
  bool is_quasi_split() const { return form_ != Form::inner; }
  // sign of the bilinear form preserved by the dual group
  int eps_hat() const;
  // dimension of the standard representation of the dual group
  int target_dim() const;
  // value of the pure inner form's character at -1 of the dual center
  int chi_v() const;
  int kottwitz() const;

  std::string to_string() const;

  bool operator==(const GroupForm&) const = default;

 private:
  GroupForm(Family f, int dim, Form form) : family_(f), dim_(dim), form_(form) {}

  Family family_ = Family::Sp;
  int dim_ = 0;
  Form form_ = Form::split;
};

}  // namespace arthur
