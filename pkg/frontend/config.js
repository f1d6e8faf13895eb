// API base URL for the anysort session service.
window.ANYSORT_API_BASE = "http://localhost:8000";
