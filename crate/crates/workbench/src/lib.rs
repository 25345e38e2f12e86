//! Workspace files, batch task execution and reports for the pairops
//! workbench, plus the acceptance suite run by `pairops verify`.

pub mod exec;
pub mod oracle;
pub mod report;
pub mod session;
pub mod verify;
pub mod workspace;

pub use exec::{execute_tasks, ExecOptions};
pub use report::{emit_report, Format, Report, TaskStatus};
pub use workspace::{parse_workspace, ErrorCode, Workspace, WorkspaceError, FIXTURE_WORKSPACE};
