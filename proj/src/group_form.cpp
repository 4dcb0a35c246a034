#include "arthur/group_form.hpp"

#include "arthur/errors.hpp"

namespace arthur {

std::string to_string(Form f) {
  switch (f) {
    case Form::split: return "split";
    case Form::qs: return "qs";
    case Form::inner: return "inner";
  }
  return "?";
}

GroupForm GroupForm::sp(int dim) { return make(Family::Sp, dim, Form::split); }

GroupForm GroupForm::so(int dim, Form form) {
  if (dim < 0) throw ValidationError("negative dimension");
  return make(dim % 2 ? Family::SOodd : Family::SOeven, dim, form);
}

GroupForm GroupForm::u(int dim, Form form) { return make(Family::U, dim, form); }

GroupForm GroupForm::make(Family family, int dim, Form form) {
  if (dim < 0) throw ValidationError("negative dimension");
  const int n = dim / 2;
  switch (family) {
    case Family::Sp:
      if (dim % 2) throw ValidationError("Sp needs even dimension");
      if (form != Form::split) throw ValidationError("Sp has no nontrivial pure inner form");
      break;
    case Family::SOodd:
      if (dim % 2 == 0) throw ValidationError("SOodd needs odd dimension");
      if (form == Form::qs) throw ValidationError("qs is only legal for even orthogonal groups");
      if (form == Form::inner && n < 1) throw ValidationError("inner form has negative Witt rank");
      break;
    case Family::SOeven:
      if (dim % 2) throw ValidationError("SOeven needs even dimension");
      if (form == Form::qs && n < 1) throw ValidationError("qs form has negative Witt rank");
      if (form == Form::inner && n < 2) throw ValidationError("inner form has negative Witt rank");
      break;
    case Family::U:
      if (form == Form::qs) throw ValidationError("qs is only legal for even orthogonal groups");
      if (dim % 2) form = Form::split;
      else if (form == Form::inner && n < 1) throw ValidationError("inner form has negative Witt rank");
      break;
  }
  return GroupForm(family, dim, form);
}

int GroupForm::witt_rank() const {
  const int n = this->n();
  switch (family_) {
    case Family::Sp: return n;
    case Family::SOodd: return form_ == Form::inner ? n - 1 : n;
    case Family::SOeven:
      if (form_ == Form::qs) return n - 1;
      if (form_ == Form::inner) return n - 2;
      return n;
    case Family::U:
      return (dim_ % 2 == 0 && form_ == Form::inner) ? n - 1 : n;
  }
  return n;
}

GroupForm GroupForm::quasi_split() const {
  if (form_ != Form::inner) return *this;
  return GroupForm(family_, dim_, Form::split);
}

int GroupForm::eps_hat() const {
  switch (family_) {
    case Family::Sp:
    case Family::SOeven: return 1;
    case Family::SOodd: return -1;
    case Family::U: return dim_ % 2 ? 1 : -1;
  }
  return 1;
}

int GroupForm::target_dim() const {
  switch (family_) {
    case Family::Sp: return dim_ + 1;
    case Family::SOodd: return dim_ - 1;
    case Family::SOeven:
    case Family::U: return dim_;
  }
  return dim_;
}

int GroupForm::chi_v() const {
  if (family_ == Family::Sp) return 1;
  return form_ == Form::inner ? -1 : 1;
}

int GroupForm::kottwitz() const {
  return (quasi_split().witt_rank() - witt_rank()) % 2 ? -1 : 1;
}

std::string GroupForm::to_string() const {
  const std::string d = std::to_string(dim_);
  switch (family_) {
    case Family::Sp: return "Sp(" + d + ")";
    case Family::SOodd:
    case Family::SOeven: return "SO(" + d + "," + arthur::to_string(form_) + ")";
    case Family::U: return "U(" + d + "," + arthur::to_string(form_) + ")";
  }
  return "?";
}

}  // namespace arthur
