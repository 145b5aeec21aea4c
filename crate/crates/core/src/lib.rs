pub mod cli;
pub mod connection;
pub mod exterior;
pub mod kind;
pub mod linalg;
pub mod normal_form;
pub mod polyforms;
pub mod verifier;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/overview.md")]
    struct Overview;
    #[doc = include_str!("../../../book/src/linalg.md")]
    struct Linalg;
    #[doc = include_str!("../../../book/src/forms.md")]
    struct Forms;
    #[doc = include_str!("../../../book/src/verifier.md")]
    struct Verifier;
    #[doc = include_str!("../../../book/src/normal-forms.md")]
    struct NormalForms;
    #[doc = include_str!("../../../book/src/polyforms.md")]
    struct Polyforms;
    #[doc = include_str!("../../../book/src/connections.md")]
    struct Connections;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
